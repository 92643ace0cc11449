#include <gtest/gtest.h>

#include <random>

#include "oigraph/matfq.hpp"

using namespace oigraph;

namespace {

MatFq random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
  MatFq m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Elem{pick(rng)};
  }
  return m;
}

MatFq random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    MatFq m = random_matrix(f, n, n, rng);
    if (determinant(m).code != 0) return m;
  }
}

}  // namespace

TEST(Rref, Examples) {
  auto f3 = Field::make(3, 1);
  auto r = rref(MatFq::from_ints(f3, {{0, 1}, {1, 0}}));
  EXPECT_EQ(r.reduced, MatFq::identity(f3, 2));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));

  r = rref(MatFq::from_ints(f3, {{1, 1}, {2, 2}}));
  EXPECT_EQ(r.reduced, MatFq::from_ints(f3, {{1, 1}}));
  EXPECT_EQ(r.rank, 1u);

  const auto m = MatFq::from_ints(f3, {{1, 2, 0}, {0, 0, 1}});
  r = rref(m);
  EXPECT_EQ(r.reduced, m);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
}

TEST(Rref, IdempotentAndRowSpaceOracle) {
  std::mt19937_64 rng(42);
  for (const char* spec : {"3", "5", "9"}) {
    auto f = Field::parse(spec);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t rows = 1 + trial % 4;
      const MatFq m = random_matrix(f, rows, 5, rng);
      const auto r = rref(m);
      EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
      const MatFq u = random_invertible(f, rows, rng);
      EXPECT_EQ(rref(u * m).reduced, r.reduced);
    }
  }
}

TEST(Kernel, Examples) {
  auto f3 = Field::make(3, 1);
  EXPECT_EQ(kernel(MatFq::identity(f3, 3)).rows(), 0u);
  EXPECT_EQ(kernel(MatFq::from_ints(f3, {{1}, {2}})), MatFq::from_ints(f3, {{1, 1}}));
  EXPECT_EQ(kernel(MatFq(f3, 2, 2)), MatFq::identity(f3, 2));
}

TEST(Kernel, RankNullity) {
  std::mt19937_64 rng(3);
  auto f = Field::make(5, 1);
  for (int trial = 0; trial < 300; ++trial) {
    const MatFq m = random_matrix(f, 4, 1 + trial % 5, rng);
    const MatFq k = kernel(m);
    EXPECT_EQ(k.rows() + rref(m).rank, 4u);
    if (k.rows()) EXPECT_TRUE((k * m).is_zero());
  }
}

TEST(Congruence, Examples) {
  auto f3 = Field::make(3, 1);
  const auto d = MatFq::from_ints(f3, {{1, 0}, {0, 2}});
  auto c = congruence_diagonalize(d);
  EXPECT_EQ(c.diagonal, d);
  EXPECT_EQ(c.transform, MatFq::identity(f3, 2));

  const auto h = MatFq::from_ints(f3, {{0, 1}, {1, 0}});
  c = congruence_diagonalize(h);
  EXPECT_EQ(c.diagonal, MatFq::from_ints(f3, {{2, 0}, {0, 1}}));
  EXPECT_EQ(c.transform * h * c.transform.transpose(), c.diagonal);

  c = congruence_diagonalize(MatFq(f3, 3, 3));
  EXPECT_TRUE(c.diagonal.is_zero());
  EXPECT_EQ(c.transform, MatFq::identity(f3, 3));

  EXPECT_THROW(congruence_diagonalize(MatFq::from_ints(f3, {{0, 1}, {0, 0}})), Error);
}

TEST(Congruence, AllSymmetric3x3OverF3) {
  auto f3 = Field::make(3, 1);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    std::vector<long long> u(6);
    for (auto& x : u) {
      x = c % 3;
      c /= 3;
    }
    const auto g = MatFq::from_ints(f3, {{u[0], u[1], u[2]}, {u[1], u[3], u[4]}, {u[2], u[4], u[5]}});
    const auto r = congruence_diagonalize(g);
    EXPECT_NE(determinant(r.transform).code, 0u);
    EXPECT_EQ(r.transform * g * r.transform.transpose(), r.diagonal);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) EXPECT_EQ(r.diagonal(i, j).code, 0u);
      }
    }
  }
}

TEST(MatOps, DeterminantTransposeInverse) {
  auto f3 = Field::make(3, 1);
  EXPECT_EQ(determinant(MatFq::from_ints(f3, {{0, 1}, {1, 0}})), Elem{2});
  std::mt19937_64 rng(9);
  auto f5 = Field::make(5, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const MatFq a = random_invertible(f5, 4, rng);
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a * inverse(a), MatFq::identity(f5, 4));
    EXPECT_EQ(inverse(a) * a, MatFq::identity(f5, 4));
  }
  EXPECT_THROW(inverse(MatFq::from_ints(f3, {{1, 1}, {1, 1}})), Error);
  EXPECT_THROW(MatFq(f3, 2, 3) * MatFq(f3, 2, 3), Error);
  EXPECT_THROW(determinant(MatFq(f3, 2, 3)), Error);
}
