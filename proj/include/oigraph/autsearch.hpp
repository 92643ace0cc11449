#pragma once

#include <vector>

#include "oigraph/graph.hpp"
#include "oigraph/perm.hpp"

namespace oigraph {

/// Ordered vertex partition. Cells hold ascending vertex ids.
struct ColoredPartition {
  std::vector<std::vector<std::uint32_t>> cells;
  std::vector<std::uint32_t> cell_of;

  static ColoredPartition trivial(std::size_t n);
  static ColoredPartition from_cells(std::size_t n, std::vector<std::vector<std::uint32_t>> cells);
  bool discrete() const { return cells.size() == cell_of.size(); }
};

/// Cells keyed by (loop flag, degree), ascending.
ColoredPartition initial_partition(const OiGraph& g);

/// Coarsest equitable refinement. New cells are ordered by the old cell and
/// then by the neighbour-count signature, so the result commutes with
/// relabelling.
ColoredPartition refine(const OiGraph& g, ColoredPartition partition);

/// Adjacency and loop flags preserved. Throws on a length mismatch.
bool is_automorphism(const OiGraph& g, const Perm& perm);

struct AutSearchResult {
  BigInt order;
  std::vector<Perm> generators;
  std::size_t nodes = 0;
  double seconds = 0;
};

/// Individualisation-refinement search for Aut(g). Throws BudgetError when
/// the graph has more than `budget` vertices.
AutSearchResult automorphism_search(const OiGraph& g, std::size_t budget = 2000);
BigInt full_aut_order(const OiGraph& g, std::size_t budget = 2000);

/// g with vertex v renamed to perm[v]; the vertex table is permuted alike.
OiGraph relabel(const OiGraph& g, const Perm& perm);

}  // namespace oigraph
