#include "oigraph/ospace.hpp"

#include <algorithm>
#include <set>

namespace oigraph {

std::string to_string(DiscVariant d) {
  switch (d) {
    case DiscVariant::none: return "none";
    case DiscVariant::one: return "one";
    case DiscVariant::z: return "z";
    case DiscVariant::fixed: return "fixed";
  }
  return "none";
}

DiscVariant parse_disc(const std::string& s) {
  if (s == "none") return DiscVariant::none;
  if (s == "one" || s == "1") return DiscVariant::one;
  if (s == "z") return DiscVariant::z;
  if (s == "fixed") return DiscVariant::fixed;
  throw Error("unknown disc variant '" + s + "' (expected one|z)");
}

SpacePtr SpaceDescriptor::make(int nu, int delta, DiscVariant disc, FieldPtr field) {
  if (nu < 0) throw Error("nu must be non-negative");
  if (delta < 0 || delta > 2) throw Error("delta must be 0, 1 or 2");
  if (2 * nu + delta < 2) throw Error("2nu+delta must be at least 2");
  if (delta == 2 && disc == DiscVariant::none) disc = DiscVariant::fixed;
  const bool consistent = (delta == 0 && disc == DiscVariant::none) ||
                          (delta == 1 && (disc == DiscVariant::one || disc == DiscVariant::z)) ||
                          (delta == 2 && disc == DiscVariant::fixed);
  if (!consistent) {
    throw Error("disc variant '" + to_string(disc) + "' is inconsistent with delta = " + std::to_string(delta));
  }
  return SpacePtr(new SpaceDescriptor(nu, delta, disc, std::move(field)));
}

SpaceDescriptor::SpaceDescriptor(int nu, int delta, DiscVariant disc, FieldPtr field)
    : nu_(nu), delta_(delta), disc_(disc), n_(static_cast<std::size_t>(2 * nu + delta)),
      field_(std::move(field)), form_(field_, n_, n_) {
  const Field& f = *field_;
  for (int i = 1; i <= nu_; ++i) {
    form_(e(i), this->f(i)) = f.one();
    form_(this->f(i), e(i)) = f.one();
  }
  const std::size_t base = static_cast<std::size_t>(2 * nu_);
  if (delta_ == 1) {
    form_(base, base) = disc_ == DiscVariant::one ? f.one() : z();
  } else if (delta_ == 2) {
    form_(base, base) = f.one();
    form_(base + 1, base + 1) = f.neg(z());
  }
}

std::size_t SpaceDescriptor::epsilon() const {
  if (delta_ < 1) throw Error("space has no epsilon coordinate");
  return static_cast<std::size_t>(2 * nu_);
}

std::size_t SpaceDescriptor::kappa() const {
  if (delta_ < 2) throw Error("space has no kappa coordinate");
  return static_cast<std::size_t>(2 * nu_ + 1);
}

MatFq SpaceDescriptor::unit(std::size_t c) const {
  MatFq v(field_, 1, n_);
  v(0, c) = field_->one();
  return v;
}

Elem SpaceDescriptor::pair(std::span<const Elem> x, std::span<const Elem> y) const {
  const Field& f = *field_;
  Elem s = f.zero();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Elem sij = form_(i, j);
      if (sij.code) s = f.add(s, f.mul(f.mul(x[i], sij), y[j]));
    }
  }
  return s;
}

std::string SpaceDescriptor::label() const {
  std::string out = "Oi(" + std::to_string(n_) + "," + std::to_string(field_->q()) + ")[nu=" +
                    std::to_string(nu_) + ",delta=" + std::to_string(delta_);
  if (delta_ == 1) out += ",disc=" + to_string(disc_);
  return out + "]";
}

std::string SubspaceType::to_string() const {
  std::string out = "(" + std::to_string(m) + "," + std::to_string(rank) + "," + std::to_string(s);
  if (tag == Gamma::one) out += ",1";
  if (tag == Gamma::z) out += ",z";
  return out + ")";
}

Subspace Subspace::make(SpacePtr space, const MatFq& rows) {
  if (rows.cols() != space->n()) throw Error("subspace rows have the wrong length");
  auto red = rref(rows);
  if (red.rank == 0) throw Error("zero subspace is not a vertex");
  if (red.rank == space->n()) throw Error("the full space is not a vertex");
  return Subspace(std::move(space), std::move(red.reduced));
}

Subspace Subspace::from_rref(SpacePtr space, MatFq basis) { return Subspace(std::move(space), std::move(basis)); }

MatFq gram(const Subspace& p) {
  const auto& b = p.basis();
  return b * p.space()->form() * b.transpose();
}

Subspace dual(const Subspace& p) {
  const auto& space = p.space();
  MatFq k = kernel(space->form() * p.basis().transpose());
  return Subspace::from_rref(space, std::move(k));
}

namespace {

// An isotropic vector of diag(a0, a1, a2); always exists over a finite field.
std::vector<Elem> isotropic_in_ternary(const Field& f, Elem a0, Elem a1, Elem a2) {
  // Try (x, 1, w): a0 x^2 + a1 + a2 w^2 = 0.
  for (std::uint32_t xc = 0; xc < f.q(); ++xc) {
    const Elem x{xc};
    const Elem lhs = f.add(f.mul(a0, f.mul(x, x)), a1);
    if (lhs.code == 0) return {x, f.one(), f.zero()};
    const Elem w2 = f.neg(f.div(lhs, a2));
    if (f.is_square(w2)) return {x, f.one(), f.sqrt_of_square(w2)};
  }
  // Then (1, 0, w).
  const Elem w2 = f.neg(f.div(a0, a2));
  if (f.is_square(w2)) return {f.one(), f.zero(), f.sqrt_of_square(w2)};
  throw Error("no isotropic vector in a ternary form");
}

std::vector<Elem> nonzero_diagonal(const MatFq& g) {
  const auto d = congruence_diagonalize(g).diagonal;
  std::vector<Elem> out;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d(i, i).code) out.push_back(d(i, i));
  }
  return out;
}

}  // namespace

WittDecomposition witt_decompose(const MatFq& g) {
  if (!g.is_symmetric()) throw Error("witt_decompose needs a symmetric matrix");
  const FieldPtr& fp = g.field();
  const Field& f = *fp;
  std::vector<Elem> diag = nonzero_diagonal(g);
  WittDecomposition out;
  out.rank = static_cast<int>(diag.size());

  while (diag.size() >= 3) {
    const std::size_t d = diag.size();
    const MatFq form = MatFq::diagonal(fp, diag);
    MatFq v(fp, 1, d);
    const auto iso = isotropic_in_ternary(f, diag[0], diag[1], diag[2]);
    for (std::size_t i = 0; i < 3; ++i) v(0, i) = iso[i];

    // Partner w with <v,w> = 1, then make it isotropic.
    const MatFq vs = v * form;
    std::size_t j = 0;
    while (vs(0, j).code == 0) ++j;
    MatFq w(fp, 1, d);
    w(0, j) = f.inv(vs(0, j));
    const Elem ww = (w * form * w.transpose())(0, 0);
    const Elem half = f.inv(f.from_int(2));
    for (std::size_t i = 0; i < d; ++i) w(0, i) = f.sub(w(0, i), f.mul(f.mul(ww, half), v(0, i)));

    // Orthogonal complement of the hyperbolic plane span{v, w}.
    const MatFq plane = v.stack(w);
    const MatFq complement = kernel(form * plane.transpose());
    diag = nonzero_diagonal(complement * form * complement.transpose());
    if (diag.size() != d - 2) throw Error("internal: complement of a hyperbolic plane is degenerate");
    ++out.s;
  }

  if (diag.size() == 2) {
    if (f.is_square(f.neg(f.mul(diag[0], diag[1])))) {
      ++out.s;
    }
  } else if (diag.size() == 1) {
    out.tag = f.is_square(diag[0]) ? Gamma::one : Gamma::z;
  }
  out.gamma = out.rank - 2 * out.s;
  return out;
}

int witt_bruteforce_oracle(const MatFq& g) {
  if (!g.is_symmetric()) throw Error("oracle needs a symmetric matrix");
  const Field& f = *g.field();
  const std::size_t m = g.rows();
  double size = 1;
  for (std::size_t i = 0; i < m; ++i) size *= f.q();
  if (size > 1e6) throw BudgetError("oracle instance too large: q^m exceeds 10^6");
  if (m == 0) return 0;

  const std::size_t rank = rref(g).rank;

  // Projective points: first nonzero coordinate equal to 1.
  std::vector<MatFq> isotropic;
  std::vector<Elem> x(m);
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::fill(x.begin(), x.end(), f.zero());
    x[lead] = f.one();
    while (true) {
      MatFq v(g.field(), 1, m, x);
      if ((v * g * v.transpose())(0, 0).code == 0) isotropic.push_back(v);
      std::size_t i = m;
      bool done = true;
      while (i > lead + 1) {
        --i;
        if (++x[i].code < f.q()) {
          done = false;
          break;
        }
        x[i].code = 0;
      }
      if (done) break;
    }
  }

  // Grow totally isotropic subspaces one dimension at a time.
  std::set<std::vector<std::uint32_t>> level;
  std::vector<MatFq> current;
  for (const auto& v : isotropic) {
    current.push_back(v);
  }
  int best = current.empty() ? 0 : 1;
  while (!current.empty()) {
    std::vector<MatFq> next;
    level.clear();
    for (const auto& w : current) {
      const MatFq wg = w * g;
      for (const auto& v : isotropic) {
        if (!(wg * v.transpose()).is_zero()) continue;
        auto red = rref(w.stack(v));
        if (red.rank == w.rows()) continue;
        std::vector<std::uint32_t> key;
        for (auto e : red.reduced.data()) key.push_back(e.code);
        if (level.insert(key).second) next.push_back(std::move(red.reduced));
      }
    }
    if (!next.empty()) best = static_cast<int>(next.front().rows());
    current = std::move(next);
  }
  return best - static_cast<int>(m - rank);
}

SubspaceType classify_type(const Subspace& p) {
  const auto w = witt_decompose(gram(p));
  return SubspaceType{static_cast<int>(p.dim()), w.rank, w.s, w.tag};
}

int disc_square_class(const Subspace& p) {
  const Elem d = determinant(gram(p));
  if (d.code == 0) throw Error("disc_square_class needs a nonsingular Gram matrix");
  return p.space()->field()->is_square(d) ? 1 : 0;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.space().get() != b.space().get() && !(a.space()->label() == b.space()->label())) {
    throw Error("subspaces belong to different spaces");
  }
  return Subspace::from_rref(a.space(), rref(a.basis().stack(b.basis())).reduced);
}

bool contains(const Subspace& big, const Subspace& small) {
  return rref(big.basis().stack(small.basis())).rank == big.dim();
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t m, std::uint64_t q) {
  if (m > n) return 0;
  // [n,m] = [n-1,m-1] + q^m [n-1,m]
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    t[i][0] = 1;
    std::uint64_t qj = 1;
    for (std::size_t j = 1; j <= i; ++j) {
      qj *= q;
      t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? qj * t[i - 1][j] : 0);
    }
  }
  return t[n][m];
}

void enumerate_subspaces(const SpacePtr& space, std::size_t m,
                         const std::function<void(const Subspace&)>& visit) {
  const std::size_t n = space->n();
  if (m < 1 || m >= n) throw Error("subspace dimension must lie in [1, n-1]");
  const Field& f = *space->field();

  std::vector<std::size_t> piv(m);
  for (std::size_t i = 0; i < m; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = piv[i] + 1; c < n; ++c) {
        if (!is_pivot[c]) free.emplace_back(i, c);
      }
    }
    MatFq basis(space->field(), m, n);
    for (std::size_t i = 0; i < m; ++i) basis(i, piv[i]) = f.one();
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < free.size(); ++k) basis(free[k].first, free[k].second) = Elem{digits[k]};
      visit(Subspace::from_rref(space, basis));
      std::size_t k = free.size();
      bool done = true;
      while (k > 0) {
        --k;
        if (++digits[k] < f.q()) {
          done = false;
          break;
        }
        digits[k] = 0;
      }
      if (done) break;
    }
    // Next pivot set in lexicographic order.
    std::size_t i = m;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (piv[i] < n - m + i) {
        ++piv[i];
        for (std::size_t j = i + 1; j < m; ++j) piv[j] = piv[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
}

std::vector<Subspace> all_subspaces(const SpacePtr& space, std::size_t m) {
  std::vector<Subspace> out;
  out.reserve(gaussian_binomial(space->n(), m, space->field()->q()));
  enumerate_subspaces(space, m, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

std::map<SubspaceType, std::uint64_t> count_by_type(const SpacePtr& space, std::size_t m, std::uint64_t budget) {
  const auto total = gaussian_binomial(space->n(), m, space->field()->q());
  if (total > budget) {
    throw BudgetError("enumeration of " + std::to_string(total) + " subspaces exceeds budget " +
                      std::to_string(budget));
  }
  std::map<SubspaceType, std::uint64_t> counts;
  enumerate_subspaces(space, m, [&](const Subspace& s) { ++counts[classify_type(s)]; });
  return counts;
}

EdgeTypeTriple EdgeTypeTriple::of(const Subspace& x1, const Subspace& x2) {
  const auto t1 = classify_type(x1);
  const auto t2 = classify_type(x2);
  const Subspace sum = subspace_sum(x1, x2);
  return EdgeTypeTriple{std::min(t1, t2), std::max(t1, t2), classify_type(sum), sum.is_vertex()};
}

std::string EdgeTypeTriple::to_string() const {
  return "{" + low.to_string() + "," + high.to_string() + "}+" + sum.to_string() + (sum_is_vertex ? "" : "*");
}

}  // namespace oigraph
