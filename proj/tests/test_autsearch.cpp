#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oigraph/autsearch.hpp"
#include "oigraph/symmetry.hpp"

using namespace oigraph;

namespace {

OiGraph make(int nu, int delta, const char* field, DiscVariant disc = DiscVariant::none) {
  if (delta == 1 && disc == DiscVariant::none) disc = DiscVariant::one;
  return build_graph(SpaceDescriptor::make(nu, delta, disc, Field::parse(field)));
}

const OiGraph& oi43() {
  static const OiGraph g = make(2, 0, "3");
  return g;
}

const AutSearchResult& oi43_search() {
  static const AutSearchResult r = automorphism_search(oi43());
  return r;
}

Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  Perm p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(Refine, Oi23SplitsLoopsFromPair) {
  const OiGraph g = make(1, 0, "3");
  const auto p = refine(g, initial_partition(g));
  ASSERT_EQ(p.cells.size(), 2u);
  for (const auto& cell : p.cells) {
    ASSERT_EQ(cell.size(), 2u);
    EXPECT_EQ(g.has_loop(cell[0]), g.has_loop(cell[1]));
  }
  // The trivial partition refines the same way: loops are part of the signature.
  const auto t = refine(g, ColoredPartition::trivial(g.size()));
  EXPECT_EQ(t.cells.size(), 2u);
}

TEST(Refine, DiscreteIsFixed) {
  const OiGraph g = make(1, 1, "3");
  std::vector<std::vector<std::uint32_t>> cells;
  for (std::uint32_t v = 0; v < g.size(); ++v) cells.push_back({v});
  const auto d = ColoredPartition::from_cells(g.size(), cells);
  const auto r = refine(g, d);
  EXPECT_TRUE(r.discrete());
  EXPECT_EQ(r.cells, d.cells);
}

TEST(Refine, Oi43NoCoarserThanOrbits) {
  // Every refined cell lies inside one automorphism orbit, since refinement
  // is invariant; the orbits of the full group are the type fibers merged in pairs.
  const OiGraph& g = oi43();
  const auto p = refine(g, initial_partition(g));
  const auto orbits = vertex_orbits(g, oi43_search().generators);
  std::vector<std::size_t> orbit_of(g.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (auto v : orbits[i]) orbit_of[v] = i;
  }
  for (const auto& cell : p.cells) {
    for (auto v : cell) EXPECT_EQ(orbit_of[v], orbit_of[cell.front()]);
  }
  EXPECT_GE(p.cells.size(), orbits.size());
}

TEST(FullAutOrder, SmallCases) {
  EXPECT_EQ(full_aut_order(make(1, 0, "3")), 4);
  EXPECT_EQ(full_aut_order(make(1, 0, "5")), 16);
  EXPECT_EQ(full_aut_order(make(1, 0, "9")), 768);
  EXPECT_EQ(full_aut_order(make(1, 1, "3")), 24);
  EXPECT_EQ(full_aut_order(make(1, 1, "3", DiscVariant::z)), 24);
}

TEST(FullAutOrder, Oi43Measured) {
  // The search finds similitudes with non-square multiplier on top of the
  // projective semilinear group of order 576.
  EXPECT_EQ(oi43_search().order, 1152);
  EXPECT_EQ(group_order(oi43_search().generators, oi43().size()).order, oi43_search().order);
  const auto po_e = group_order(po_e_generators(oi43()), oi43().size()).order;
  EXPECT_EQ(po_e, 576);
  EXPECT_EQ(oi43_search().order % po_e, 0);
}

TEST(FullAutOrder, Oi43SimilitudeSwapsTypes) {
  const OiGraph& g = oi43();
  const auto f = g.space()->field();
  // diag(1,1,-1,-1) scales the form by -1.
  const MatFq t = MatFq::diagonal(f, {Elem{1}, Elem{1}, Elem{2}, Elem{2}});
  Perm p(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    p[v] = static_cast<std::uint32_t>(g.table().index_of(Subspace::make(g.space(), g.vertex(v).basis() * t)));
  }
  EXPECT_TRUE(is_automorphism(g, p));
  bool swapped = false;
  for (std::size_t v = 0; v < g.size(); ++v) swapped = swapped || !(classify_type(g.vertex(v)) == classify_type(g.vertex(p[v])));
  EXPECT_TRUE(swapped);
}

TEST(IsAutomorphism, Basics) {
  const OiGraph g = make(1, 0, "3");
  EXPECT_TRUE(is_automorphism(g, identity_perm(4)));
  std::size_t loop = 0, plain = 0;
  for (std::size_t v = 0; v < 4; ++v) (g.has_loop(v) ? loop : plain) = v;
  Perm swap = identity_perm(4);
  std::swap(swap[loop], swap[plain]);
  EXPECT_FALSE(is_automorphism(g, swap));
  EXPECT_THROW(is_automorphism(g, identity_perm(3)), Error);
  for (const auto& p : po_e_generators(oi43())) EXPECT_TRUE(is_automorphism(oi43(), p));
  for (const auto& p : oi43_search().generators) EXPECT_TRUE(is_automorphism(oi43(), p));
}

TEST(AutomorphismSearch, RelabelInvariance) {
  std::mt19937_64 rng(77);
  const OiGraph base = make(1, 1, "3");
  const BigInt expected = full_aut_order(base);
  for (int trial = 0; trial < 10; ++trial) {
    const OiGraph h = relabel(base, random_perm(base.size(), rng));
    EXPECT_EQ(full_aut_order(h), expected);
    EXPECT_EQ(h.edge_count(), base.edge_count());
  }
  const OiGraph h = relabel(oi43(), random_perm(oi43().size(), rng));
  EXPECT_EQ(full_aut_order(h), oi43_search().order);
}

TEST(AutomorphismSearch, GeneratedGroupMatchesOrder) {
  for (const OiGraph& g : {make(1, 0, "5"), make(1, 1, "3"), make(1, 2, "3")}) {
    const auto r = automorphism_search(g);
    for (const auto& p : r.generators) EXPECT_TRUE(is_automorphism(g, p));
    EXPECT_EQ(group_order(r.generators, g.size()).order, r.order);
  }
}

TEST(AutomorphismSearch, OrbitsAreUnionsOfTypeFibers) {
  const OiGraph& g = oi43();
  const auto orbits = vertex_orbits(g, oi43_search().generators);
  const auto fibers = type_fibers(g);
  std::vector<std::size_t> orbit_of(g.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (auto v : orbits[i]) orbit_of[v] = i;
  }
  for (const auto& fiber : fibers) {
    for (auto v : fiber) EXPECT_EQ(orbit_of[v], orbit_of[fiber.front()]);
  }
}

TEST(AutomorphismSearch, Budget) {
  EXPECT_THROW(automorphism_search(oi43(), 100), BudgetError);
  EXPECT_NO_THROW(automorphism_search(make(1, 0, "3"), 4));
}
