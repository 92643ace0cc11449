#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "oigraph/ospace.hpp"

namespace oigraph {

/// Fixed-size packed bitset.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Subspaces indexed by position with reverse lookup from canonical basis.
class VertexTable {
 public:
  VertexTable() = default;
  VertexTable(SpacePtr space, std::vector<Subspace> vertices);

  const SpacePtr& space() const { return space_; }
  std::size_t size() const { return vertices_.size(); }
  const Subspace& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Subspace>& vertices() const { return vertices_; }
  /// Index of the subspace with the given RREF basis, if present.
  std::optional<std::size_t> find(const MatFq& rref_basis) const;
  std::size_t index_of(const Subspace& s) const;

 private:
  SpacePtr space_;
  std::vector<Subspace> vertices_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Sort key for vertices: dimension, then basis entries in field order.
std::vector<std::uint32_t> vertex_sort_key(const Subspace& s);

/// A S B^T == 0.
bool adjacent(const Subspace& a, const Subspace& b);

constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

/// Orthogonal inner product graph: all nonzero proper subspaces, joined when
/// orthogonal. Loops are kept as flags and stay out of the adjacency rows.
class OiGraph {
 public:
  OiGraph(VertexTable table, std::vector<Bitset> adjacency, std::vector<bool> loops);

  const SpacePtr& space() const { return table_.space(); }
  const VertexTable& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  const Subspace& vertex(std::size_t v) const { return table_[v]; }
  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  bool has_edge(std::size_t u, std::size_t v) const { return u == v ? loops_[u] : adj_[u].test(v); }
  bool has_loop(std::size_t v) const { return loops_[v]; }
  const std::vector<bool>& loops() const { return loops_; }
  std::size_t edge_count() const;  // non-loop edges
  std::size_t loop_count() const;

  friend bool operator==(const OiGraph& a, const OiGraph& b);

 private:
  VertexTable table_;
  std::vector<Bitset> adj_;
  std::vector<bool> loops_;
};

struct BuildOptions {
  std::uint64_t budget = 1'000'000;
  unsigned threads = 1;
  /// Restrict to these dimensions; empty means 1..n-1.
  std::vector<std::size_t> dims;
};

std::uint64_t vertex_count(const SpaceDescriptor& space);
OiGraph build_graph(const SpacePtr& space, const BuildOptions& options = {});

/// Number of distinct non-loop neighbours.
std::size_t degree(const OiGraph& g, std::size_t v);
std::vector<std::vector<std::size_t>> components(const OiGraph& g);
/// Largest BFS eccentricity; kInfiniteDistance when disconnected.
std::size_t diameter(const OiGraph& g, unsigned threads = 1);
std::vector<std::size_t> bfs_distances(const OiGraph& g, std::size_t source);
/// A shortest path from u to v (inclusive). Throws when v is unreachable.
std::vector<std::size_t> witness_path(const OiGraph& g, std::size_t u, std::size_t v);
/// Induced subgraph on the one-dimensional vertices.
OiGraph dim1_subgraph(const OiGraph& g);

struct CliqueSummary {
  std::size_t size = 0;        // |M|
  std::size_t anisotropic = 0; // |N|, members without a loop
  std::vector<std::size_t> members;
};

/// Maximum clique of pairwise orthogonal one-dimensional vertices. Among the
/// maximum cliques the one with the fewest anisotropic members is reported.
CliqueSummary max_clique_dim1(const OiGraph& g);

std::string export_dot(const OiGraph& g, bool header = true);
std::string export_json(const OiGraph& g);
OiGraph import_json(const std::string& text);

}  // namespace oigraph
