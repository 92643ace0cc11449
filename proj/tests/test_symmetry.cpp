#include <gtest/gtest.h>

#include <random>

#include "oigraph/autsearch.hpp"
#include "oigraph/symmetry.hpp"

using namespace oigraph;

namespace {

SpacePtr oi(int nu, int delta, const char* field, DiscVariant disc = DiscVariant::none) {
  if (delta == 1 && disc == DiscVariant::none) disc = DiscVariant::one;
  return SpaceDescriptor::make(nu, delta, disc, Field::parse(field));
}

const OiGraph& graph_of(int nu, int delta, const char* field, DiscVariant disc = DiscVariant::none) {
  static std::map<std::string, std::unique_ptr<OiGraph>> cache;
  const std::string key = std::to_string(nu) + "/" + std::to_string(delta) + "/" + field + "/" + to_string(disc);
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<OiGraph>(build_graph(oi(nu, delta, field, disc)));
  return *slot;
}

std::size_t index(const OiGraph& g, const std::vector<std::vector<long long>>& rows) {
  return g.table().index_of(Subspace::make(g.space(), MatFq::from_ints(g.space()->field(), rows)));
}

// Random element of the group generated by the reflections.
MatFq random_orthogonal(const std::vector<MatFq>& gens, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  MatFq t = MatFq::identity(gens.front().field(), gens.front().rows());
  for (int i = 0; i < 12; ++i) t = t * gens[pick(rng)];
  return t;
}

}  // namespace

TEST(Reflection, Properties) {
  auto s = oi(2, 0, "3");
  const auto f = s->field();
  const MatFq v = MatFq::from_ints(f, {{1, 0, 1, 0}});  // e1 + f1
  const MatFq t = reflection(*s, v);
  EXPECT_TRUE(is_orthogonal(*s, t));
  EXPECT_EQ(t * t, MatFq::identity(f, 4));
  EXPECT_EQ(determinant(t), f->neg(f->one()));
  EXPECT_EQ(MatFq::from_ints(f, {{0, 1, 0, 0}}) * t, MatFq::from_ints(f, {{0, 1, 0, 0}}));
  EXPECT_EQ(MatFq::from_ints(f, {{0, 0, 0, 1}}) * t, MatFq::from_ints(f, {{0, 0, 0, 1}}));
  EXPECT_EQ(MatFq::from_ints(f, {{1, 0, 0, 0}}) * t, MatFq::from_ints(f, {{0, 0, 2, 0}}));  // e1 -> -f1
  EXPECT_THROW(reflection(*s, MatFq::from_ints(f, {{1, 0, 0, 0}})), Error);
  for (const auto& g : orthogonal_generators(oi(1, 1, "5", DiscVariant::z))) {
    EXPECT_TRUE(is_orthogonal(*oi(1, 1, "5", DiscVariant::z), g));
    EXPECT_EQ(determinant(g), Elem{4});
  }
}

TEST(OrthogonalGenerators, ClosureOrders) {
  auto s = oi(2, 0, "3");
  const auto gens = orthogonal_generators(s);
  EXPECT_EQ(gens.size(), 24u);  // 40 points, 16 isotropic
  EXPECT_EQ(matrix_group_order(*s, gens), 1152);
  auto t = oi(1, 0, "3");
  EXPECT_EQ(matrix_group_order(*t, orthogonal_generators(t)), 4);
}

TEST(OrthogonalGenerators, ExhaustiveO2OverF3) {
  auto s = oi(1, 0, "3");
  std::size_t count = 0;
  for (std::uint32_t code = 0; code < 81; ++code) {
    MatFq t(s->field(), 2, 2);
    std::uint32_t c = code;
    for (std::size_t i = 0; i < 4; ++i) {
      t(i / 2, i % 2) = Elem{c % 3};
      c /= 3;
    }
    if (is_orthogonal(*s, t)) ++count;
  }
  EXPECT_EQ(count, 4u);
}

TEST(PermFromMatrix, IdentityAndSign) {
  const OiGraph& g = graph_of(2, 0, "3");
  const auto f = g.space()->field();
  EXPECT_TRUE(is_identity(perm_from_matrix(g, MatFq::identity(f, 4))));
  EXPECT_TRUE(is_identity(perm_from_matrix(g, -MatFq::identity(f, 4))));
  EXPECT_THROW(perm_from_matrix(g, MatFq::diagonal(f, {Elem{1}, Elem{1}, Elem{2}, Elem{2}})), Error);
}

TEST(PermFromMatrix, ReflectionsPreserveAdjacency) {
  const OiGraph& g = graph_of(2, 0, "3");
  for (const auto& t : orthogonal_generators(g.space())) EXPECT_TRUE(is_automorphism(g, perm_from_matrix(g, t)));
}

TEST(PermFromMatrix, SignInvariance) {
  std::mt19937_64 rng(1234);
  for (const OiGraph* g : {&graph_of(2, 0, "3"), &graph_of(1, 1, "3"), &graph_of(1, 1, "5", DiscVariant::z)}) {
    const auto gens = orthogonal_generators(g->space());
    for (int trial = 0; trial < 100; ++trial) {
      const MatFq t = random_orthogonal(gens, rng);
      EXPECT_EQ(perm_from_matrix(*g, t), perm_from_matrix(*g, -t));
    }
  }
}

TEST(PermFromSemilinear, Examples) {
  const OiGraph& g = graph_of(2, 0, "3");
  const auto f = g.space()->field();
  EXPECT_TRUE(is_identity(perm_from_semilinear(g, {{f->one(), f->one()}, 1, 1, 0})));
  const Perm p = perm_from_semilinear(g, {{Elem{1}, Elem{2}}, 1, 1, 0});
  for (auto rows : std::vector<std::vector<std::vector<long long>>>{
           {{1, 0, 0, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}}}) {
    const auto v = index(g, rows);
    EXPECT_EQ(p[v], v);
  }
  const auto e12 = index(g, {{1, 1, 0, 0}});
  EXPECT_NE(p[e12], e12);
  EXPECT_THROW(perm_from_semilinear(g, {{Elem{2}, Elem{1}}, 1, 1, 0}), Error);  // k1 non-square
  EXPECT_THROW(perm_from_semilinear(g, {{Elem{1}, Elem{1}}, 1, 1, 1}), Error);  // no Frobenius over F_3
  EXPECT_THROW(perm_from_semilinear(g, {{Elem{1}}, 1, 1, 0}), Error);
}

TEST(PermFromSemilinear, FrobeniusOverF9) {
  const OiGraph g = build_graph(oi(2, 0, "9"));
  const Perm p = perm_from_semilinear(g, {{Elem{1}, Elem{1}}, 1, 1, 1});
  EXPECT_FALSE(is_identity(p));
  for (std::size_t c = 0; c < 4; ++c) {
    std::vector<long long> row(4, 0);
    row[c] = 1;
    const auto v = index(g, {row});
    EXPECT_EQ(p[v], v);
  }
  // t -> -t moves the point [e1 + t e2].
  MatFq m(g.space()->field(), 1, 4);
  m(0, 0) = Elem{1};
  m(0, 1) = Elem{3};
  const auto v = g.table().index_of(Subspace::make(g.space(), m));
  EXPECT_NE(p[v], v);
}

TEST(EGenerators, FixStandardBasisVertices) {
  for (const OiGraph* g : {&graph_of(2, 0, "3"), &graph_of(1, 1, "3", DiscVariant::z), &graph_of(1, 2, "5"),
                           &graph_of(1, 1, "9", DiscVariant::z)}) {
    const auto& sp = *g->space();
    for (const auto& t : e_generators(sp)) {
      const Perm p = perm_from_semilinear(*g, t);
      EXPECT_TRUE(is_automorphism(*g, p));
      for (std::size_t c = 0; c < sp.n(); ++c) {
        std::vector<long long> row(sp.n(), 0);
        row[c] = 1;
        const auto v = index(*g, {row});
        EXPECT_EQ(p[v], v) << sp.label();
      }
    }
  }
}

TEST(GroupOrder, Values) {
  const OiGraph& g43 = graph_of(2, 0, "3");
  EXPECT_EQ(group_order({identity_perm(g43.size())}, g43.size()).order, 1);
  EXPECT_EQ(group_order({}, g43.size()).order, 1);
  const auto summary = group_order(po_e_generators(g43), g43.size());
  EXPECT_EQ(summary.order, 576);
  BigInt product = 1;
  for (auto s : summary.transversal_sizes) product *= s;
  EXPECT_EQ(product, summary.order);
  EXPECT_EQ(group_order(po_e_generators(graph_of(2, 1, "3")), 2662).order, 51840);
}

TEST(StabilizerChain, MembershipAndSymmetricGroup) {
  // S_6 from a transposition and a 6-cycle.
  const Perm swap01{1, 0, 2, 3, 4, 5};
  const Perm cycle{1, 2, 3, 4, 5, 0};
  const StabilizerChain chain(6, {swap01, cycle});
  EXPECT_EQ(chain.order(), 720);
  EXPECT_TRUE(chain.contains(compose(cycle, swap01)));
  // A_5 on 5 points from two 3-cycles.
  const StabilizerChain a5(5, {{1, 2, 0, 3, 4}, {0, 2, 3, 1, 4}, {0, 1, 3, 4, 2}});
  EXPECT_EQ(a5.order(), 60);
  EXPECT_FALSE(a5.contains({1, 0, 2, 3, 4}));
  EXPECT_THROW(StabilizerChain(3, {{0, 0, 1}}), Error);
}

TEST(EdgeAndVertexOrbits, MatchTypeFibers) {
  for (const OiGraph* g : {&graph_of(2, 0, "3"), &graph_of(1, 1, "3"), &graph_of(1, 1, "3", DiscVariant::z)}) {
    const auto gens = po_e_generators(*g);
    EXPECT_TRUE(same_partition(vertex_orbits(*g, gens), type_fibers(*g))) << g->space()->label();
    EXPECT_TRUE(same_partition(edge_orbits(*g, gens).orbits, edge_type_fibers(*g))) << g->space()->label();
  }
  const OiGraph& g = graph_of(2, 0, "3");
  const auto singles = vertex_orbits(g, {});
  EXPECT_EQ(singles.size(), g.size());
}

TEST(EdgeAndVertexOrbits, GeneratedGroupPreservesTypes) {
  const OiGraph& g = graph_of(2, 1, "3");
  const auto gens = po_e_generators(g);
  std::vector<SubspaceType> types(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) types[v] = classify_type(g.vertex(v));
  for (const auto& p : gens) {
    for (std::size_t v = 0; v < g.size(); ++v) ASSERT_EQ(types[v], types[p[v]]);
  }
  EXPECT_TRUE(same_partition(vertex_orbits(g, gens), type_fibers(g)));
}

TEST(EdgeOrbits, Oi23LoopsShareOrbit) {
  const OiGraph& g = graph_of(1, 0, "3");
  const auto eo = edge_orbits(g, po_e_generators(g));
  const auto e = index(g, {{1, 0}}), f = index(g, {{0, 1}});
  std::size_t le = 0, lf = 0;
  for (std::size_t i = 0; i < eo.edges.size(); ++i) {
    if (eo.edges[i] == std::make_pair(e, e)) le = i;
    if (eo.edges[i] == std::make_pair(f, f)) lf = i;
  }
  bool together = false;
  for (const auto& orbit : eo.orbits) {
    const bool has_e = std::find(orbit.begin(), orbit.end(), le) != orbit.end();
    const bool has_f = std::find(orbit.begin(), orbit.end(), lf) != orbit.end();
    together = together || (has_e && has_f);
  }
  EXPECT_TRUE(together);
}

TEST(AutOrderFormula, Values) {
  EXPECT_EQ(*aut_order_formula(1, 0, *Field::make(3, 1)).value, 4);
  EXPECT_EQ(*aut_order_formula(1, 0, *Field::make(5, 1)).value, 16);
  EXPECT_EQ(*aut_order_formula(1, 0, *Field::make(3, 2)).value, 768);
  EXPECT_EQ(*aut_order_formula(2, 0, *Field::make(3, 1)).value, 576);
  EXPECT_EQ(*aut_order_formula(2, 1, *Field::make(3, 1)).value, 51840);
  const auto uncovered = aut_order_formula(1, 1, *Field::make(3, 1));
  EXPECT_FALSE(uncovered.value);
  EXPECT_FALSE(uncovered.covered);
  const auto d2 = aut_order_formula(2, 2, *Field::make(3, 1));
  EXPECT_TRUE(d2.value);
  EXPECT_FALSE(d2.covered);
  EXPECT_TRUE(aut_order_formula(2, 2, *Field::make(5, 1)).covered);
}

TEST(ESubgroupOrder, Values) {
  EXPECT_EQ(e_subgroup_order(*oi(2, 0, "3")), 2);
  EXPECT_EQ(e_subgroup_order(*oi(2, 0, "9")), 32);
  EXPECT_THROW(e_subgroup_order(*oi(1, 0, "3")), Error);
  const OiGraph& g = graph_of(2, 0, "3");
  EXPECT_EQ(group_order(e_perm_generators(g), g.size()).order, 2);
  const OiGraph& g5 = graph_of(2, 0, "5");
  EXPECT_EQ(group_order(e_perm_generators(g5), g5.size()).order, e_subgroup_order(*g5.space()));
}
