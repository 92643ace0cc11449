#include "oigraph/perm.hpp"

#include <algorithm>
#include <map>

#include "oigraph/ff.hpp"

namespace oigraph {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw Error("permutation degree mismatch");
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.size() != degree_ || !is_permutation(g)) throw Error("generator is not a permutation of the right degree");
    auto [residue, stop] = strip(g, 0);
    if (is_identity(residue)) continue;
    if (stop == levels_.size()) add_base_point(residue);
    add_strong_generator(std::move(residue));
  }
  run();
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto it = levels_[l].transversal.find(p[base_[l]]);
    if (it == levels_[l].transversal.end()) return {std::move(p), l};
    p = compose(p, it->second.u_inv);
  }
  return {std::move(p), levels_.size()};
}

void StabilizerChain::add_base_point(const Perm& moving) {
  std::uint32_t point = 0;
  while (moving[point] == point) ++point;
  base_.push_back(point);
  Level level;
  level.orbit.push_back(point);
  level.transversal.emplace(point, Coset{identity_perm(degree_), identity_perm(degree_)});
  levels_.push_back(std::move(level));
}

void StabilizerChain::add_strong_generator(Perm g) {
  const std::size_t idx = strong_.size();
  strong_.push_back(std::move(g));
  const Perm& s = strong_.back();
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    if (l > 0 && s[base_[l - 1]] != base_[l - 1]) break;
    levels_[l].gens.push_back(idx);
    extend_orbit(l);
  }
}

void StabilizerChain::extend_orbit(std::size_t l) {
  Level& level = levels_[l];
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const std::uint32_t point = level.orbit[i];
    for (auto gi : level.gens) {
      const std::uint32_t image = strong_[gi][point];
      if (level.transversal.count(image)) continue;
      Perm u = compose(level.transversal.at(point).u, strong_[gi]);
      Perm u_inv = inverse(u);
      level.transversal.emplace(image, Coset{std::move(u), std::move(u_inv)});
      level.orbit.push_back(image);
    }
  }
}

void StabilizerChain::run() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !restarted; ++oi) {
      const std::uint32_t point = levels_[i].orbit[oi];
      for (std::size_t gk = 0; gk < levels_[i].gens.size(); ++gk) {
        Level& level = levels_[i];
        const std::size_t gi = level.gens[gk];
        const std::uint64_t key = (static_cast<std::uint64_t>(point) << 32) | gi;
        if (!level.checked.insert(key).second) continue;
        const std::uint32_t image = strong_[gi][point];
        Perm h = compose(compose(level.transversal.at(point).u, strong_[gi]), level.transversal.at(image).u_inv);
        auto [residue, stop] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (is_identity(residue)) continue;
        if (stop == levels_.size()) add_base_point(residue);
        add_strong_generator(std::move(residue));
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

BigInt StabilizerChain::order() const {
  BigInt order = 1;
  for (const auto& level : levels_) order *= level.orbit.size();
  return order;
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  auto [residue, stop] = strip(p, 0);
  return stop == levels_.size() && is_identity(residue);
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
}

std::vector<std::vector<std::size_t>> UnionFind::classes() {
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < parent_.size(); ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::vector<std::size_t>> orbits(std::size_t degree, const std::vector<Perm>& generators) {
  UnionFind uf(degree);
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error("permutation degree mismatch");
    for (std::size_t x = 0; x < degree; ++x) uf.unite(x, g[x]);
  }
  return uf.classes();
}

}  // namespace oigraph
