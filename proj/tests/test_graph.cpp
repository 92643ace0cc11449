#include <gtest/gtest.h>

#include "oigraph/graph.hpp"

using namespace oigraph;

namespace {

SpacePtr oi(int nu, int delta, const char* field, DiscVariant disc = DiscVariant::none) {
  if (delta == 1 && disc == DiscVariant::none) disc = DiscVariant::one;
  return SpaceDescriptor::make(nu, delta, disc, Field::parse(field));
}

Subspace span(const SpacePtr& s, const std::vector<std::vector<long long>>& rows) {
  return Subspace::make(s, MatFq::from_ints(s->field(), rows));
}

std::size_t index(const OiGraph& g, const std::vector<std::vector<long long>>& rows) {
  return g.table().index_of(span(g.space(), rows));
}

const OiGraph& oi43() {
  static const OiGraph g = build_graph(oi(2, 0, "3"));
  return g;
}

}  // namespace

TEST(Adjacent, Examples) {
  auto s = oi(1, 0, "3");
  EXPECT_TRUE(adjacent(span(s, {{1, 1}}), span(s, {{1, 2}})));
  EXPECT_TRUE(adjacent(span(s, {{1, 0}}), span(s, {{1, 0}})));
  auto t = oi(1, 1, "3");
  EXPECT_FALSE(adjacent(span(t, {{0, 0, 1}}), span(t, {{0, 0, 1}})));
  EXPECT_THROW(adjacent(span(s, {{1, 0}}), span(oi(1, 0, "5"), {{1, 0}})), Error);
}

TEST(BuildGraph, Oi23) {
  const OiGraph g = build_graph(oi(1, 0, "3"));
  ASSERT_EQ(g.size(), 4u);
  const auto e = index(g, {{1, 0}}), f = index(g, {{0, 1}});
  const auto a = index(g, {{1, 1}}), b = index(g, {{1, 2}});
  EXPECT_TRUE(g.has_loop(e));
  EXPECT_TRUE(g.has_loop(f));
  EXPECT_FALSE(g.has_loop(a));
  EXPECT_FALSE(g.has_loop(b));
  EXPECT_TRUE(g.has_edge(a, b));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.loop_count(), 2u);
  EXPECT_EQ(degree(g, e), 0u);
  EXPECT_EQ(degree(g, a), 1u);
  EXPECT_THROW(degree(g, 4), Error);
}

TEST(BuildGraph, VertexCounts) {
  EXPECT_EQ(oi43().size(), 210u);
  EXPECT_EQ(build_graph(oi(1, 1, "3")).size(), 26u);
  EXPECT_EQ(build_graph(oi(1, 1, "3", DiscVariant::z)).size(), 26u);
  EXPECT_EQ(vertex_count(*oi(2, 1, "3")), 2662u);
  EXPECT_EQ(vertex_count(*oi(2, 0, "9")), 9102u);
  BuildOptions small;
  small.budget = 100;
  EXPECT_THROW(build_graph(oi(2, 0, "3"), small), BudgetError);
}

TEST(BuildGraph, DeterministicAcrossThreadCounts) {
  BuildOptions four;
  four.threads = 4;
  EXPECT_EQ(build_graph(oi(2, 0, "3"), four), oi43());
}

TEST(BuildGraph, VertexOrderIsDimensionThenBasis) {
  const OiGraph& g = oi43();
  for (std::size_t v = 1; v < g.size(); ++v) EXPECT_LT(vertex_sort_key(g.vertex(v - 1)), vertex_sort_key(g.vertex(v)));
}

TEST(BuildGraph, InvariantsOnOi43) {
  const OiGraph& g = oi43();
  for (std::size_t u = 0; u < g.size(); ++u) {
    const Subspace& a = g.vertex(u);
    EXPECT_EQ(g.has_loop(u), gram(a).is_zero());
    const Subspace da = dual(a);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (u == v) continue;
      const bool ab = adjacent(a, g.vertex(v));
      EXPECT_EQ(ab, adjacent(g.vertex(v), a));
      EXPECT_EQ(ab, g.has_edge(u, v));
      EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
      if (ab) {
        EXPECT_TRUE(contains(da, g.vertex(v)));
        EXPECT_TRUE(contains(dual(g.vertex(v)), a));
      }
    }
  }
}

TEST(Degree, DualOfPointWithUniqueNeighbour) {
  // A point X whose only neighbour among the hyperplanes is X^perp's own partner.
  const OiGraph& g = oi43();
  bool found = false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.vertex(v).dim() != 3) continue;
    if (degree(g, v) == 1) {
      std::size_t only = 0;
      g.neighbors(v).for_each([&](std::size_t w) { only = w; });
      EXPECT_EQ(g.vertex(only).dim(), 1u);
      EXPECT_EQ(dual(g.vertex(only)), g.vertex(v));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Components, Examples) {
  const OiGraph g = build_graph(oi(1, 0, "3"));
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 3u);
  const auto a = index(g, {{1, 1}}), b = index(g, {{1, 2}});
  bool pair_found = false;
  for (const auto& c : comps) {
    if (c.size() == 2) pair_found = (c == std::vector<std::size_t>{std::min(a, b), std::max(a, b)});
  }
  EXPECT_TRUE(pair_found);
  EXPECT_EQ(components(oi43()).size(), 1u);
  EXPECT_EQ(components(build_graph(oi(1, 1, "3"))).size(), 1u);
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(build_graph(oi(1, 0, "3"))), kInfiniteDistance);
  EXPECT_EQ(diameter(build_graph(oi(1, 0, "5"))), kInfiniteDistance);
  EXPECT_EQ(diameter(oi43()), 4u);
  EXPECT_EQ(diameter(oi43(), 3), 4u);
  EXPECT_EQ(diameter(build_graph(oi(1, 1, "3"))), 4u);
  EXPECT_EQ(diameter(build_graph(oi(1, 1, "5", DiscVariant::z))), 4u);
  EXPECT_EQ(diameter(build_graph(oi(1, 2, "3"))), 4u);
}

TEST(WitnessPath, ProofPairHasDistanceFour) {
  const OiGraph& g = oi43();
  // A = [e1, e2, f1], B = [e1, f1, f2] in coordinates (e1, e2, f1, f2).
  const auto a = index(g, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  const auto b = index(g, {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  const auto path = witness_path(g, a, b);
  EXPECT_EQ(path.size(), 5u);
  EXPECT_EQ(bfs_distances(g, a)[b], 4u);
  for (std::size_t i = 1; i < path.size(); ++i) EXPECT_TRUE(g.has_edge(path[i - 1], path[i]));
  EXPECT_EQ(witness_path(g, a, a), std::vector<std::size_t>{a});
  std::size_t nb = 0;
  g.neighbors(a).for_each([&](std::size_t w) { nb = w; });
  EXPECT_EQ(witness_path(g, a, nb).size(), 2u);
  const OiGraph small = build_graph(oi(1, 0, "3"));
  EXPECT_THROW(witness_path(small, index(small, {{1, 0}}), index(small, {{0, 1}})), Error);
}

TEST(Dim1Subgraph, Counts) {
  EXPECT_EQ(dim1_subgraph(oi43()).size(), 40u);
  EXPECT_EQ(dim1_subgraph(build_graph(oi(1, 1, "3"))).size(), 13u);
  const OiGraph g = build_graph(oi(1, 0, "3"));
  EXPECT_EQ(dim1_subgraph(g), g);
}

TEST(MaxClique, MutuallyOrthogonalPoints) {
  // Every clique found must be pairwise orthogonal; sizes here are measured values.
  const auto c43 = max_clique_dim1(oi43());
  EXPECT_EQ(c43.size, 4u);
  EXPECT_EQ(c43.anisotropic, 0u);
  const OiGraph sub = dim1_subgraph(oi43());
  for (auto u : c43.members) {
    for (auto v : c43.members) {
      if (u != v) EXPECT_TRUE(sub.has_edge(u, v));
    }
  }
  const auto c23 = max_clique_dim1(build_graph(oi(1, 0, "3")));
  EXPECT_EQ(c23.size, 2u);
  EXPECT_EQ(c23.anisotropic, 2u);
  const auto c33 = max_clique_dim1(build_graph(oi(1, 1, "3")));
  EXPECT_EQ(c33.size, 3u);
  EXPECT_EQ(c33.anisotropic, 3u);
}

TEST(Export, DotForOi23) {
  const OiGraph g = build_graph(oi(1, 0, "3"));
  const std::string dot = export_dot(g);
  EXPECT_NE(dot.find("graph oi {"), std::string::npos);
  EXPECT_NE(dot.find("// oigraph "), std::string::npos);
  std::size_t nodes = 0, loops = 0, edges = 0, pos = 0;
  while ((pos = dot.find("[label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  for (std::size_t v = 0; v < 4; ++v) {
    const std::string self = "v" + std::to_string(v) + " -- v" + std::to_string(v) + ";";
    if (dot.find(self) != std::string::npos) ++loops;
  }
  pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    ++pos;
  }
  EXPECT_EQ(nodes, 4u);
  EXPECT_EQ(loops, 2u);
  EXPECT_EQ(edges - loops, 1u);
  EXPECT_EQ(export_dot(g, false).find("// oigraph "), std::string::npos);
  EXPECT_EQ(export_dot(g), export_dot(build_graph(oi(1, 0, "3"))));
}

TEST(Export, JsonRoundTrip) {
  for (auto s : {oi(1, 0, "3"), oi(1, 1, "3", DiscVariant::z), oi(2, 0, "3")}) {
    const OiGraph g = build_graph(s);
    const std::string text = export_json(g);
    EXPECT_EQ(import_json(text), g);
    EXPECT_EQ(export_json(import_json(text)), text);
  }
  auto custom = SpaceDescriptor::make(1, 0, DiscVariant::none, Field::make(3, 2, std::vector<std::uint32_t>{2, 1, 1}));
  const OiGraph g = build_graph(custom);
  const std::string text = export_json(g);
  EXPECT_NE(text.find("\"modulus\""), std::string::npos);
  EXPECT_EQ(import_json(text), g);
  EXPECT_THROW(import_json("{"), Error);
  EXPECT_THROW(import_json("{\"space\":{}}"), Error);
}
