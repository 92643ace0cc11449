#include "oigraph/symmetry.hpp"

#include <algorithm>
#include <map>

#include "oigraph/autsearch.hpp"

namespace oigraph {

bool is_orthogonal(const SpaceDescriptor& space, const MatFq& t) {
  if (t.rows() != space.n() || t.cols() != space.n()) return false;
  return t * space.form() * t.transpose() == space.form();
}

MatFq reflection(const SpaceDescriptor& space, const MatFq& v) {
  if (v.rows() != 1 || v.cols() != space.n()) throw Error("reflection needs a 1 x n row vector");
  const Field& f = *space.field();
  const Elem c = space.pair(v.row(0), v.row(0));
  if (c.code == 0) throw Error("cannot reflect in an isotropic vector");
  const Elem scale = f.div(f.from_int(2), c);
  // T = I - scale * (S v^T) v
  const MatFq sv = space.form() * v.transpose();
  MatFq t = MatFq::identity(space.field(), space.n());
  for (std::size_t i = 0; i < space.n(); ++i) {
    for (std::size_t j = 0; j < space.n(); ++j) {
      t(i, j) = f.sub(t(i, j), f.mul(scale, f.mul(sv(i, 0), v(0, j))));
    }
  }
  return t;
}

std::vector<MatFq> orthogonal_generators(const SpacePtr& space) {
  std::vector<MatFq> gens;
  enumerate_subspaces(space, 1, [&](const Subspace& p) {
    const MatFq& v = p.basis();
    if (space->pair(v.row(0), v.row(0)).code != 0) gens.push_back(reflection(*space, v));
  });
  return gens;
}

namespace {

template <typename MapBasis>
Perm map_vertices(const OiGraph& g, MapBasis&& map_basis) {
  Perm image(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    const Subspace moved = Subspace::make(g.space(), map_basis(g.vertex(v).basis()));
    const auto idx = g.table().find(moved.basis());
    if (!idx) throw Error("image of a vertex is not a vertex");
    image[v] = static_cast<std::uint32_t>(*idx);
  }
  if (!is_permutation(image)) throw Error("vertex map is not a bijection");
  if (!is_automorphism(g, image)) throw Error("vertex map does not preserve adjacency");
  return image;
}

}  // namespace

Perm perm_from_matrix(const OiGraph& g, const MatFq& t) {
  if (!is_orthogonal(*g.space(), t)) throw Error("matrix is not orthogonal for this form");
  return map_vertices(g, [&](const MatFq& basis) { return basis * t; });
}

MatFq semilinear_diagonal(const SpaceDescriptor& space, const SemilinearTuple& tuple) {
  const Field& f = *space.field();
  if (tuple.k.size() != static_cast<std::size_t>(space.nu())) throw Error("expected one k per hyperbolic pair");
  if (tuple.frob >= f.e()) throw Error("Frobenius power out of range");
  for (std::size_t i = 0; i < tuple.k.size(); ++i) {
    if (tuple.k[i].code == 0) throw Error("k entries must be nonzero");
  }
  if (!tuple.k.empty() && !f.is_square(tuple.k[0])) throw Error("k_1 must be a square");
  auto sign = [&](int s) {
    if (s != 1 && s != -1) throw Error("definite-slot signs must be +1 or -1");
    return f.from_int(s);
  };
  std::vector<Elem> diag;
  for (auto k : tuple.k) diag.push_back(k);
  for (auto k : tuple.k) diag.push_back(f.inv(k));
  auto slot = [&](Elem c, int s) {
    return f.mul(sign(s), f.sqrt_of_square(f.div(f.frobenius(c, tuple.frob), c)));
  };
  if (space.delta() >= 1) diag.push_back(slot(space.form()(space.epsilon(), space.epsilon()), tuple.delta1));
  if (space.delta() == 2) diag.push_back(slot(space.form()(space.kappa(), space.kappa()), tuple.delta2));
  return MatFq::diagonal(space.field(), diag);
}

Perm perm_from_semilinear(const OiGraph& g, const SemilinearTuple& tuple) {
  const MatFq d = semilinear_diagonal(*g.space(), tuple);
  const Field& f = *g.space()->field();
  return map_vertices(g, [&](const MatFq& basis) {
    MatFq twisted = basis;
    for (std::size_t i = 0; i < twisted.rows(); ++i) {
      for (std::size_t j = 0; j < twisted.cols(); ++j) twisted(i, j) = f.frobenius(twisted(i, j), tuple.frob);
    }
    return twisted * d;
  });
}

std::vector<SemilinearTuple> e_generators(const SpaceDescriptor& space) {
  const Field& f = *space.field();
  const std::size_t nu = static_cast<std::size_t>(space.nu());
  const SemilinearTuple base{std::vector<Elem>(nu, f.one()), 1, 1, 0};
  std::vector<SemilinearTuple> gens;
  const Elem g = f.primitive();
  if (nu >= 1 && f.mul(g, g) != f.one()) {
    auto t = base;
    t.k[0] = f.mul(g, g);
    gens.push_back(t);
  }
  for (std::size_t i = 1; i < nu; ++i) {
    auto t = base;
    t.k[i] = g;
    gens.push_back(t);
  }
  if (space.delta() >= 1) {
    auto t = base;
    t.delta1 = -1;
    gens.push_back(t);
  }
  if (space.delta() == 2) {
    auto t = base;
    t.delta2 = -1;
    gens.push_back(t);
  }
  if (f.e() > 1) {
    auto t = base;
    t.frob = 1;
    gens.push_back(t);
  }
  return gens;
}

std::vector<Perm> e_perm_generators(const OiGraph& g) {
  std::vector<Perm> out;
  for (const auto& t : e_generators(*g.space())) {
    Perm p = perm_from_semilinear(g, t);
    if (!is_identity(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Perm> po_e_generators(const OiGraph& g) {
  std::vector<Perm> out;
  for (const auto& t : orthogonal_generators(g.space())) {
    Perm p = perm_from_matrix(g, t);
    if (!is_identity(p)) out.push_back(std::move(p));
  }
  for (auto& p : e_perm_generators(g)) out.push_back(std::move(p));
  return out;
}

GroupSummary group_order(const std::vector<Perm>& generators, std::size_t degree) {
  const StabilizerChain chain(degree, generators);
  return {chain.order(), chain.base(), chain.transversal_sizes()};
}

BigInt matrix_group_order(const SpaceDescriptor& space, const std::vector<MatFq>& generators) {
  const Field& f = *space.field();
  const std::size_t n = space.n();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= f.q();
    if (total > 1'000'000) throw BudgetError("too many vectors for the matrix action");
  }
  const std::size_t degree = total - 1;
  auto decode = [&](std::uint64_t idx) {
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = Elem{static_cast<std::uint32_t>(idx % f.q())};
      idx /= f.q();
    }
    return v;
  };
  auto encode = [&](const std::vector<Elem>& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = n; i-- > 0;) idx = idx * f.q() + v[i].code;
    return idx;
  };
  std::vector<Perm> perms;
  for (const auto& t : generators) {
    if (t.rows() != n || t.cols() != n) throw Error("generator has the wrong shape");
    Perm p(degree);
    for (std::size_t x = 0; x < degree; ++x) {
      const auto v = decode(x + 1);
      std::vector<Elem> w(n, f.zero());
      for (std::size_t i = 0; i < n; ++i) {
        if (v[i].code == 0) continue;
        for (std::size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(v[i], t(i, j)));
      }
      const std::uint64_t img = encode(w);
      if (img == 0) throw Error("generator is singular");
      p[x] = static_cast<std::uint32_t>(img - 1);
    }
    perms.push_back(std::move(p));
  }
  return StabilizerChain(degree, perms).order();
}

std::vector<std::vector<std::size_t>> vertex_orbits(const OiGraph& g, const std::vector<Perm>& generators) {
  return orbits(g.size(), generators);
}

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const OiGraph& g, bool with_loops) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (with_loops && g.has_loop(u)) edges.emplace_back(u, u);
    g.neighbors(u).for_each([&](std::size_t w) {
      if (u < w) edges.emplace_back(u, w);
    });
  }
  return edges;
}

EdgeOrbits edge_orbits(const OiGraph& g, const std::vector<Perm>& generators) {
  EdgeOrbits out;
  out.edges = edge_list(g);
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(out.edges.size() * 2);
  auto key = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * g.size() + b;
  };
  for (std::size_t i = 0; i < out.edges.size(); ++i) index.emplace(key(out.edges[i].first, out.edges[i].second), i);
  UnionFind uf(out.edges.size());
  for (const auto& p : generators) {
    if (p.size() != g.size()) throw Error("permutation degree mismatch");
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
      const auto it = index.find(key(p[out.edges[i].first], p[out.edges[i].second]));
      if (it == index.end()) throw Error("permutation does not map edges to edges");
      uf.unite(i, it->second);
    }
  }
  out.orbits = uf.classes();
  return out;
}

bool same_partition(std::vector<std::vector<std::size_t>> a, std::vector<std::vector<std::size_t>> b) {
  for (auto& c : a) std::sort(c.begin(), c.end());
  for (auto& c : b) std::sort(c.begin(), c.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

namespace {

template <typename Key>
std::vector<std::vector<std::size_t>> fibers_to_classes(std::map<Key, std::vector<std::size_t>>& fibers) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, members] : fibers) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> type_fibers(const OiGraph& g) {
  std::map<SubspaceType, std::vector<std::size_t>> fibers;
  for (std::size_t v = 0; v < g.size(); ++v) fibers[classify_type(g.vertex(v))].push_back(v);
  return fibers_to_classes(fibers);
}

std::vector<std::vector<std::size_t>> edge_type_fibers(const OiGraph& g) {
  const auto edges = edge_list(g);
  std::vector<SubspaceType> types(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) types[v] = classify_type(g.vertex(v));
  std::map<EdgeTypeTriple, std::vector<std::size_t>> fibers;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    fibers[EdgeTypeTriple::of(g.vertex(edges[i].first), g.vertex(edges[i].second))].push_back(i);
  }
  return fibers_to_classes(fibers);
}

namespace {

BigInt power(BigInt base, unsigned k) {
  BigInt out = 1;
  while (k--) out *= base;
  return out;
}

BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

FormulaResult aut_order_formula(int nu, int delta, const Field& field) {
  FormulaResult r;
  const BigInt q = field.q();
  const bool minus_one_square = field.is_square(field.neg(field.one()));
  auto prod = [&](int lo, int hi, int sign) {
    BigInt out = 1;
    for (int i = lo; i <= hi; ++i) out *= sign > 0 ? power(q, i) + 1 : power(q, i) - 1;
    return out;
  };
  const unsigned extension = field.e();
  if (delta == 0 && nu == 1) {
    r.value = power(2, (field.q() + 1) / 2) * factorial((field.q() - 1) / 2);
    r.covered = true;
    r.branch = "nu=1: 2^((q+1)/2) ((q-1)/2)!";
    return r;
  }
  if (nu < 2 || delta < 0 || delta > 2) {
    r.note = "no closed form for nu=" + std::to_string(nu) + ", delta=" + std::to_string(delta);
    return r;
  }
  BigInt v;
  if (delta == 0) {
    v = power(q, nu * (nu - 1)) * prod(1, nu, -1) * prod(1, nu - 1, +1) * extension;
    r.branch = "delta=0, nu>=2";
  } else if (delta == 1) {
    v = power(q, nu * nu) * prod(1, nu, -1) * prod(1, nu, +1) * extension;
    r.branch = "delta=1, nu>=2";
  } else {
    v = power(q, nu * (nu + 1)) * prod(1, nu, -1) * prod(1, nu + 1, +1) * extension / 2;
    r.branch = "delta=2, nu>=2";
  }
  if (delta <= 1) {
    if (minus_one_square) v /= 2;
    r.branch += minus_one_square ? ", -1 a square" : ", -1 a non-square";
  }
  r.value = v;
  r.covered = delta < 2 || minus_one_square;
  if (!r.covered) r.note = "delta=2 closed form is only established when -1 is a square";
  return r;
}

BigInt e_subgroup_order(const SpaceDescriptor& space) {
  if (space.nu() < 2) throw Error("E-subgroup order needs nu >= 2");
  const Field& f = *space.field();
  const BigInt q = f.q();
  BigInt order = (q - 1) / 2;
  for (int i = 1; i < space.nu(); ++i) order *= q - 1;
  for (int i = 0; i < space.delta(); ++i) order *= 2;
  order *= f.e();
  if (f.is_square(f.neg(f.one()))) order /= 2;
  return order;
}

}  // namespace oigraph
