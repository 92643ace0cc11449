#include "oigraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oigraph/version.hpp"

namespace oigraph {

namespace {

std::string basis_key(const MatFq& m) {
  std::string key;
  key.reserve(m.data().size() * 2 + 1);
  key.push_back(static_cast<char>(m.rows()));
  for (auto e : m.data()) {
    key.push_back(static_cast<char>(e.code & 0xff));
    key.push_back(static_cast<char>(e.code >> 8));
  }
  return key;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

VertexTable::VertexTable(SpacePtr space, std::vector<Subspace> vertices)
    : space_(std::move(space)), vertices_(std::move(vertices)) {
  index_.reserve(vertices_.size() * 2);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(basis_key(vertices_[i].basis()), i).second) throw Error("duplicate vertex in table");
  }
}

std::optional<std::size_t> VertexTable::find(const MatFq& rref_basis) const {
  auto it = index_.find(basis_key(rref_basis));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VertexTable::index_of(const Subspace& s) const {
  auto idx = find(s.basis());
  if (!idx) throw Error("subspace is not in the vertex table");
  return *idx;
}

std::vector<std::uint32_t> vertex_sort_key(const Subspace& s) {
  const Field& f = *s.space()->field();
  std::vector<std::uint32_t> key;
  key.reserve(s.basis().data().size() + 1);
  key.push_back(static_cast<std::uint32_t>(s.dim()));
  for (auto e : s.basis().data()) key.push_back(f.order_key(e));
  return key;
}

bool adjacent(const Subspace& a, const Subspace& b) {
  if (a.space()->label() != b.space()->label() || !a.space()->field()->same_as(*b.space()->field())) {
    throw Error("descriptor mismatch");
  }
  return (a.basis() * a.space()->form() * b.basis().transpose()).is_zero();
}

OiGraph::OiGraph(VertexTable table, std::vector<Bitset> adjacency, std::vector<bool> loops)
    : table_(std::move(table)), adj_(std::move(adjacency)), loops_(std::move(loops)) {
  if (adj_.size() != table_.size() || loops_.size() != table_.size()) throw Error("graph shape mismatch");
}

std::size_t OiGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::size_t OiGraph::loop_count() const { return static_cast<std::size_t>(std::count(loops_.begin(), loops_.end(), true)); }

bool operator==(const OiGraph& a, const OiGraph& b) {
  if (a.space()->label() != b.space()->label() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.vertex(i) == b.vertex(i))) return false;
  }
  return a.adj_ == b.adj_ && a.loops_ == b.loops_;
}

std::uint64_t vertex_count(const SpaceDescriptor& space) {
  std::uint64_t total = 0;
  for (std::size_t m = 1; m < space.n(); ++m) total += gaussian_binomial(space.n(), m, space.field()->q());
  return total;
}

OiGraph build_graph(const SpacePtr& space, const BuildOptions& options) {
  std::vector<std::size_t> dims = options.dims;
  if (dims.empty()) {
    for (std::size_t m = 1; m < space->n(); ++m) dims.push_back(m);
  }
  std::uint64_t total = 0;
  for (auto m : dims) total += gaussian_binomial(space->n(), m, space->field()->q());
  if (total > options.budget) {
    throw BudgetError(space->label() + " has " + std::to_string(total) + " vertices, over the budget of " +
                      std::to_string(options.budget));
  }

  std::vector<std::pair<std::vector<std::uint32_t>, Subspace>> keyed;
  keyed.reserve(total);
  for (auto m : dims) {
    enumerate_subspaces(space, m, [&](const Subspace& s) { keyed.emplace_back(vertex_sort_key(s), s); });
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Subspace> vertices;
  vertices.reserve(keyed.size());
  for (auto& [key, s] : keyed) vertices.push_back(std::move(s));
  keyed.clear();

  const std::size_t count = vertices.size();
  const std::size_t n = space->n();
  const Field& f = *space->field();

  // Row-major (A S) and B per vertex, flattened.
  std::vector<std::vector<Elem>> left(count), right(count);
  for (std::size_t v = 0; v < count; ++v) {
    left[v] = (vertices[v].basis() * space->form()).data();
    right[v] = vertices[v].basis().data();
  }
  auto orthogonal = [&](std::size_t u, std::size_t v) {
    const auto& a = left[u];
    const auto& b = right[v];
    const std::size_t ra = a.size() / n, rb = b.size() / n;
    for (std::size_t i = 0; i < ra; ++i) {
      for (std::size_t j = 0; j < rb; ++j) {
        Elem s = f.zero();
        for (std::size_t k = 0; k < n; ++k) {
          const Elem x = a[i * n + k], y = b[j * n + k];
          if (x.code && y.code) s = f.add(s, f.mul(x, y));
        }
        if (s.code) return false;
      }
    }
    return true;
  };

  std::vector<Bitset> adj(count, Bitset(count));
  std::vector<char> loop_flags(count, 0);
  parallel_for(count, options.threads, [&](std::size_t u) {
    Bitset& row = adj[u];
    for (std::size_t v = 0; v < count; ++v) {
      if (v == u) {
        loop_flags[u] = orthogonal(u, u) ? 1 : 0;
      } else if (orthogonal(u, v)) {
        row.set(v);
      }
    }
  });
  std::vector<bool> loops(loop_flags.begin(), loop_flags.end());
  return OiGraph(VertexTable(space, std::move(vertices)), std::move(adj), std::move(loops));
}

std::size_t degree(const OiGraph& g, std::size_t v) {
  if (v >= g.size()) throw Error("vertex index out of range");
  return g.neighbors(v).count();
}

std::vector<std::vector<std::size_t>> components(const OiGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      g.neighbors(comp[head]).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const OiGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), kInfiniteDistance);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](std::size_t w) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

namespace {

// Eccentricity by frontier expansion over bitset rows.
std::size_t eccentricity(const OiGraph& g, std::size_t source) {
  Bitset visited(g.size()), frontier(g.size());
  visited.set(source);
  frontier.set(source);
  std::size_t depth = 0, reached = 1;
  while (true) {
    Bitset next(g.size());
    frontier.for_each([&](std::size_t u) { next |= g.neighbors(u); });
    next.and_not(visited);
    if (!next.any()) break;
    visited |= next;
    reached += next.count();
    frontier = std::move(next);
    ++depth;
  }
  return reached == g.size() ? depth : kInfiniteDistance;
}

}  // namespace

std::size_t diameter(const OiGraph& g, unsigned threads) {
  if (g.size() == 0) return 0;
  if (eccentricity(g, 0) == kInfiniteDistance) return kInfiniteDistance;
  std::vector<std::size_t> ecc(g.size(), 0);
  parallel_for(g.size(), threads, [&](std::size_t v) { ecc[v] = eccentricity(g, v); });
  return *std::max_element(ecc.begin(), ecc.end());
}

std::vector<std::size_t> witness_path(const OiGraph& g, std::size_t u, std::size_t v) {
  if (u >= g.size() || v >= g.size()) throw Error("vertex index out of range");
  std::vector<std::size_t> parent(g.size(), kInfiniteDistance);
  std::deque<std::size_t> queue{u};
  parent[u] = u;
  while (!queue.empty() && parent[v] == kInfiniteDistance) {
    const std::size_t x = queue.front();
    queue.pop_front();
    g.neighbors(x).for_each([&](std::size_t w) {
      if (parent[w] == kInfiniteDistance) {
        parent[w] = x;
        queue.push_back(w);
      }
    });
  }
  if (parent[v] == kInfiniteDistance) throw Error("vertices lie in different components");
  std::vector<std::size_t> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

OiGraph dim1_subgraph(const OiGraph& g) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.vertex(v).dim() == 1) keep.push_back(v);
  }
  std::vector<Subspace> vertices;
  std::vector<bool> loops;
  for (auto v : keep) {
    vertices.push_back(g.vertex(v));
    loops.push_back(g.has_loop(v));
  }
  std::vector<Bitset> adj(keep.size(), Bitset(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i != j && g.neighbors(keep[i]).test(keep[j])) adj[i].set(j);
    }
  }
  return OiGraph(VertexTable(g.space(), std::move(vertices)), std::move(adj), std::move(loops));
}

namespace {

struct CliqueSearch {
  const OiGraph& g;
  std::vector<std::size_t> current;
  std::size_t current_aniso = 0;
  CliqueSummary best;
  bool have_best = false;

  // Greedy colouring bound on the clique number of the candidate set.
  std::size_t colour_bound(const Bitset& cand) const {
    Bitset left = cand;
    std::size_t colours = 0;
    while (left.any()) {
      ++colours;
      Bitset avail = left;
      avail.for_each([&](std::size_t v) {
        if (!avail.test(v)) return;
        left.reset(v);
        avail.reset(v);
        avail.and_not(g.neighbors(v));
      });
    }
    return colours;
  }

  bool better(std::size_t size, std::size_t aniso) const {
    if (!have_best) return true;
    return size > best.size || (size == best.size && aniso < best.anisotropic);
  }

  void expand(Bitset cand) {
    if (!cand.any()) {
      if (better(current.size(), current_aniso)) {
        best = {current.size(), current_aniso, current};
        have_best = true;
      }
      return;
    }
    std::vector<std::size_t> order;
    cand.for_each([&](std::size_t v) { order.push_back(v); });
    for (auto v : order) {
      const std::size_t bound = current.size() + colour_bound(cand);
      if (have_best && (bound < best.size || (bound == best.size && best.anisotropic == 0))) return;
      if (have_best && bound == best.size && current_aniso >= best.anisotropic) return;
      Bitset next = cand;
      next &= g.neighbors(v);
      current.push_back(v);
      const bool aniso = !g.has_loop(v);
      current_aniso += aniso;
      expand(std::move(next));
      current_aniso -= aniso;
      current.pop_back();
      cand.reset(v);
    }
    // Current set itself may be maximal only when no candidate extends it;
    // with candidates exhausted by the loop it is dominated by an extension.
  }
};

}  // namespace

CliqueSummary max_clique_dim1(const OiGraph& g) {
  bool only_dim1 = true;
  for (std::size_t v = 0; v < g.size(); ++v) only_dim1 = only_dim1 && g.vertex(v).dim() == 1;
  const OiGraph sub = only_dim1 ? g : dim1_subgraph(g);
  CliqueSearch search{sub, {}, 0, {}, false};
  Bitset all(sub.size());
  for (std::size_t v = 0; v < sub.size(); ++v) all.set(v);
  search.expand(all);
  return search.best;
}

std::string export_dot(const OiGraph& g, bool header) {
  std::ostringstream os;
  if (header) os << "// oigraph " << kVersion << "\n";
  const auto& sp = *g.space();
  os << "// space nu=" << sp.nu() << " delta=" << sp.delta() << " disc=" << to_string(sp.disc())
     << " field=" << sp.field()->descriptor() << "\n";
  os << "graph oi {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertex(v).basis().to_string() << "\"];\n";
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    g.neighbors(u).for_each([&](std::size_t w) {
      if (u < w) os << "  v" << u << " -- v" << w << ";\n";
    });
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.has_loop(v)) os << "  v" << v << " -- v" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const OiGraph& g) {
  using nlohmann::ordered_json;
  const auto& sp = *g.space();
  ordered_json space = {{"nu", sp.nu()},
                        {"delta", sp.delta()},
                        {"disc", to_string(sp.disc())},
                        {"field", sp.field()->descriptor()}};
  if (!sp.field()->default_modulus()) space["modulus"] = sp.field()->modulus();
  ordered_json vertices = ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    vertices.push_back({{"id", v}, {"dim", g.vertex(v).dim()}, {"basis", g.vertex(v).basis().to_codes()}});
  }
  ordered_json edges = ordered_json::array();
  for (std::size_t u = 0; u < g.size(); ++u) {
    g.neighbors(u).for_each([&](std::size_t w) {
      if (u < w) edges.push_back({u, w});
    });
  }
  ordered_json loops = ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.has_loop(v)) loops.push_back(v);
  }
  ordered_json doc = {{"space", space}, {"vertices", vertices}, {"edges", edges}, {"loops", loops}};
  return doc.dump(1) + "\n";
}

OiGraph import_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const auto& sp = doc.at("space");
    std::optional<std::vector<std::uint32_t>> modulus;
    if (sp.contains("modulus")) modulus = sp.at("modulus").get<std::vector<std::uint32_t>>();
    auto field = Field::parse(sp.at("field").get<std::string>(), modulus);
    auto space = SpaceDescriptor::make(sp.at("nu").get<int>(), sp.at("delta").get<int>(),
                                       parse_disc(sp.at("disc").get<std::string>()), field);
    std::vector<Subspace> vertices;
    for (const auto& v : doc.at("vertices")) {
      if (v.at("id").get<std::size_t>() != vertices.size()) throw Error("vertex ids must be 0..N-1 in order");
      const auto rows = v.at("basis").get<std::vector<std::vector<std::uint32_t>>>();
      const MatFq basis = MatFq::from_codes(field, rows);
      Subspace s = Subspace::make(space, basis);
      if (!(s.basis() == basis)) throw Error("vertex basis is not in reduced row echelon form");
      vertices.push_back(std::move(s));
    }
    const std::size_t count = vertices.size();
    std::vector<Bitset> adj(count, Bitset(count));
    for (const auto& e : doc.at("edges")) {
      const auto u = e.at(0).get<std::size_t>(), w = e.at(1).get<std::size_t>();
      if (u >= count || w >= count || u == w) throw Error("bad edge in graph JSON");
      adj[u].set(w);
      adj[w].set(u);
    }
    std::vector<bool> loops(count, false);
    for (const auto& l : doc.at("loops")) {
      const auto v = l.get<std::size_t>();
      if (v >= count) throw Error("bad loop in graph JSON");
      loops[v] = true;
    }
    return OiGraph(VertexTable(space, std::move(vertices)), std::move(adj), std::move(loops));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed graph JSON: ") + ex.what());
  }
}

}  // namespace oigraph
