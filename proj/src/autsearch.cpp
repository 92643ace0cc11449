#include "oigraph/autsearch.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace oigraph {

ColoredPartition ColoredPartition::trivial(std::size_t n) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0u);
  return from_cells(n, {std::move(all)});
}

ColoredPartition ColoredPartition::from_cells(std::size_t n, std::vector<std::vector<std::uint32_t>> cells) {
  ColoredPartition p;
  p.cell_of.assign(n, static_cast<std::uint32_t>(-1));
  for (auto& c : cells) {
    if (c.empty()) throw Error("empty cell in partition");
    std::sort(c.begin(), c.end());
  }
  p.cells = std::move(cells);
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    for (auto v : p.cells[i]) {
      if (v >= n || p.cell_of[v] != static_cast<std::uint32_t>(-1)) throw Error("cells do not partition the vertices");
      p.cell_of[v] = static_cast<std::uint32_t>(i);
    }
  }
  for (auto c : p.cell_of) {
    if (c == static_cast<std::uint32_t>(-1)) throw Error("cells do not partition the vertices");
  }
  return p;
}

ColoredPartition initial_partition(const OiGraph& g) {
  std::map<std::pair<bool, std::size_t>, std::vector<std::uint32_t>> groups;
  for (std::size_t v = 0; v < g.size(); ++v) {
    groups[{g.has_loop(v), g.neighbors(v).count()}].push_back(static_cast<std::uint32_t>(v));
  }
  std::vector<std::vector<std::uint32_t>> cells;
  for (auto& [key, members] : groups) cells.push_back(std::move(members));
  return ColoredPartition::from_cells(g.size(), std::move(cells));
}

ColoredPartition refine(const OiGraph& g, ColoredPartition partition) {
  const std::size_t n = g.size();
  if (partition.cell_of.size() != n) throw Error("partition size does not match the graph");
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<std::uint32_t> order(n);
  while (!partition.discrete()) {
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(partition.cell_of[v]);
      const std::size_t head = s.size();
      g.neighbors(v).for_each([&](std::size_t w) { s.push_back(partition.cell_of[w]); });
      std::sort(s.begin() + static_cast<std::ptrdiff_t>(head), s.end());
    }
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
    std::vector<std::vector<std::uint32_t>> cells;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || sig[order[i]] != sig[order[i - 1]]) cells.emplace_back();
      cells.back().push_back(order[i]);
    }
    if (cells.size() == partition.cells.size()) break;
    partition = ColoredPartition::from_cells(n, std::move(cells));
  }
  return partition;
}

bool is_automorphism(const OiGraph& g, const Perm& perm) {
  if (perm.size() != g.size()) throw Error("permutation length does not match the graph");
  if (!is_permutation(perm)) return false;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (g.has_loop(u) != g.has_loop(perm[u])) return false;
    const Bitset& target = g.neighbors(perm[u]);
    if (g.neighbors(u).count() != target.count()) return false;
    bool ok = true;
    g.neighbors(u).for_each([&](std::size_t w) { ok = ok && target.test(perm[w]); });
    if (!ok) return false;
  }
  return true;
}

namespace {

ColoredPartition individualize(const ColoredPartition& p, std::uint32_t v) {
  std::vector<std::vector<std::uint32_t>> cells;
  cells.reserve(p.cells.size() + 1);
  for (const auto& c : p.cells) {
    if (p.cell_of[v] == static_cast<std::uint32_t>(&c - p.cells.data())) {
      cells.push_back({v});
      std::vector<std::uint32_t> rest;
      for (auto x : c) {
        if (x != v) rest.push_back(x);
      }
      cells.push_back(std::move(rest));
    } else {
      cells.push_back(c);
    }
  }
  return ColoredPartition::from_cells(p.cell_of.size(), std::move(cells));
}

std::size_t target_cell(const ColoredPartition& p) {
  std::size_t best = p.cells.size();
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (p.cells[i].size() > 1 && (best == p.cells.size() || p.cells[i].size() < p.cells[best].size())) best = i;
  }
  return best;
}

bool same_shape(const ColoredPartition& a, const ColoredPartition& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i].size() != b.cells[i].size()) return false;
  }
  return true;
}

class Search {
 public:
  explicit Search(const OiGraph& g) : g_(g) {}

  AutSearchResult run() {
    AutSearchResult result;
    // First path down the tree.
    path_.push_back(refine(g_, initial_partition(g_)));
    ++nodes_;
    while (!path_.back().discrete()) {
      const std::size_t t = target_cell(path_.back());
      const std::uint32_t v = path_.back().cells[t].front();
      fixed_.push_back(v);
      targets_.push_back(t);
      path_.push_back(refine(g_, individualize(path_.back(), v)));
      ++nodes_;
    }
    first_leaf_ = path_.back();

    std::vector<std::vector<Perm>> level_gens(fixed_.size());
    BigInt order = 1;
    for (std::size_t level = fixed_.size(); level-- > 0;) {
      std::vector<Perm> gens;
      for (std::size_t l = level; l < fixed_.size(); ++l) gens.insert(gens.end(), level_gens[l].begin(), level_gens[l].end());
      const auto& cell = path_[level].cells[targets_[level]];
      const std::uint32_t base = fixed_[level];
      for (auto w : cell) {
        if (w == base || in_orbit(gens, base, w)) continue;
        auto found = find_mapping(level, w);
        if (found) {
          level_gens[level].push_back(*found);
          gens.push_back(std::move(*found));
        }
      }
      std::size_t orbit_size = 0;
      for (auto w : cell) orbit_size += in_orbit(gens, base, w) ? 1 : 0;
      order *= orbit_size;
    }
    result.order = order;
    for (auto& lg : level_gens) {
      for (auto& p : lg) result.generators.push_back(std::move(p));
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool in_orbit(const std::vector<Perm>& gens, std::uint32_t a, std::uint32_t b) const {
    if (a == b) return true;
    std::vector<bool> seen(g_.size(), false);
    std::vector<std::uint32_t> queue{a};
    seen[a] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& p : gens) {
        const std::uint32_t y = p[queue[i]];
        if (y == b) return true;
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  // Automorphism fixing fixed_[0..level-1] and sending fixed_[level] to w.
  std::optional<Perm> find_mapping(std::size_t level, std::uint32_t w) {
    ColoredPartition p = refine(g_, individualize(path_[level], w));
    ++nodes_;
    return descend(level + 1, p);
  }

  std::optional<Perm> descend(std::size_t depth, const ColoredPartition& p) {
    if (!same_shape(p, path_[depth])) return std::nullopt;
    if (p.discrete()) {
      Perm gamma(g_.size());
      for (std::size_t i = 0; i < p.cells.size(); ++i) gamma[first_leaf_.cells[i].front()] = p.cells[i].front();
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    const std::size_t t = target_cell(p);
    if (t != targets_[depth]) return std::nullopt;
    for (auto u : p.cells[t]) {
      ColoredPartition next = refine(g_, individualize(p, u));
      ++nodes_;
      if (auto found = descend(depth + 1, next)) return found;
    }
    return std::nullopt;
  }

  const OiGraph& g_;
  std::vector<ColoredPartition> path_;
  std::vector<std::uint32_t> fixed_;
  std::vector<std::size_t> targets_;
  ColoredPartition first_leaf_;
  std::size_t nodes_ = 0;
};

}  // namespace

AutSearchResult automorphism_search(const OiGraph& g, std::size_t budget) {
  if (g.size() > budget) {
    throw BudgetError("automorphism search on " + std::to_string(g.size()) + " vertices exceeds the budget of " +
                      std::to_string(budget));
  }
  const auto start = std::chrono::steady_clock::now();
  AutSearchResult r = Search(g).run();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

BigInt full_aut_order(const OiGraph& g, std::size_t budget) { return automorphism_search(g, budget).order; }

OiGraph relabel(const OiGraph& g, const Perm& perm) {
  if (perm.size() != g.size() || !is_permutation(perm)) throw Error("relabelling must be a permutation of the vertices");
  const std::size_t n = g.size();
  std::vector<Subspace> vertices(n);
  std::vector<bool> loops(n);
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v) {
    vertices[perm[v]] = g.vertex(v);
    loops[perm[v]] = g.has_loop(v);
    g.neighbors(v).for_each([&](std::size_t w) { adj[perm[v]].set(perm[w]); });
  }
  return OiGraph(VertexTable(g.space(), std::move(vertices)), std::move(adj), std::move(loops));
}

}  // namespace oigraph
