#include "oigraph/matfq.hpp"

#include <sstream>
#include <utility>

namespace oigraph {

MatFq::MatFq(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

MatFq::MatFq(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error("matrix data size does not match shape");
}

MatFq MatFq::identity(FieldPtr field, std::size_t n) {
  MatFq m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

MatFq MatFq::from_ints(FieldPtr field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  MatFq m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field->from_int(rows[i][j]);
  }
  return m;
}

MatFq MatFq::from_codes(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  MatFq m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field->from_code(rows[i][j]);
  }
  return m;
}

MatFq MatFq::diagonal(FieldPtr field, const std::vector<Elem>& diag) {
  MatFq m(std::move(field), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool MatFq::is_zero() const {
  for (auto v : data_) {
    if (v.code != 0) return false;
  }
  return true;
}

bool MatFq::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

MatFq MatFq::transpose() const {
  MatFq t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

MatFq MatFq::operator*(const MatFq& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
  if (!field_->same_as(*o.field_)) throw Error("field mismatch");
  const Field& f = *field_;
  MatFq out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a.code == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, o(k, j)));
    }
  }
  return out;
}

MatFq MatFq::operator-() const {
  MatFq out = *this;
  for (auto& v : out.data_) v = field_->neg(v);
  return out;
}

MatFq MatFq::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error("row block out of range");
  return MatFq(field_, count, cols_,
               std::vector<Elem>(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_));
}

MatFq MatFq::stack(const MatFq& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw Error("matrix shape mismatch in stack");
  std::vector<Elem> d = data_;
  d.insert(d.end(), below.data_.begin(), below.data_.end());
  return MatFq(field_, rows_ + below.rows_, cols_, std::move(d));
}

std::vector<std::vector<std::uint32_t>> MatFq::to_codes() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).code;
  }
  return out;
}

std::string MatFq::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << field_->to_string((*this)(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const MatFq& m) {
  const Field& f = *m.field();
  MatFq a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c).code == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    }
    const Elem scale = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = a(i, c);
      if (factor.code == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.row_block(0, r), r, std::move(pivots)};
}

MatFq kernel(const MatFq& m) {
  // x * M = 0  <=>  M^T * x^T = 0, so read the null space off rref(M^T).
  const MatFq t = m.transpose();
  const auto red = rref(t);
  const std::size_t n = t.cols();
  const Field& f = *m.field();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  MatFq basis(m.field(), n - red.rank, n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = f.one();
    for (std::size_t i = 0; i < red.rank; ++i) basis(row, red.pivots[i]) = f.neg(red.reduced(i, free));
    ++row;
  }
  if (basis.rows() == 0) return basis;
  return rref(basis).reduced;
}

Congruence congruence_diagonalize(const MatFq& g) {
  if (!g.is_symmetric()) throw Error("congruence_diagonalize needs a symmetric matrix");
  const Field& f = *g.field();
  const std::size_t n = g.rows();
  MatFq a = g;
  MatFq q = MatFq::identity(g.field(), n);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(q(i, c), q(j, c));
  };
  // row_i += s*row_j and col_i += s*col_j.
  auto add_multiple = [&](std::size_t i, std::size_t j, Elem s) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) = f.add(a(i, c), f.mul(s, a(j, c)));
    for (std::size_t r = 0; r < n; ++r) a(r, i) = f.add(a(r, i), f.mul(s, a(r, j)));
    for (std::size_t c = 0; c < n; ++c) q(i, c) = f.add(q(i, c), f.mul(s, q(j, c)));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).code == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).code == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).code == 0) ++j;
        if (j == n) continue;  // row k is already zero past the diagonal
        // New diagonal entry is 2*a(k,j), nonzero in odd characteristic.
        add_multiple(k, j, f.one());
      }
    }
    const Elem pivot_inv = f.inv(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).code == 0) continue;
      add_multiple(i, k, f.neg(f.mul(a(i, k), pivot_inv)));
    }
  }
  return {std::move(a), std::move(q)};
}

Elem determinant(const MatFq& m) {
  if (!m.is_square()) throw Error("determinant needs a square matrix");
  const Field& f = *m.field();
  MatFq a = m;
  Elem det = f.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c).code == 0) ++sel;
    if (sel == n) return f.zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Elem inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(a(i, c), inv);
      if (factor.code == 0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
    }
  }
  return det;
}

MatFq inverse(const MatFq& m) {
  if (!m.is_square()) throw Error("inverse needs a square matrix");
  const std::size_t n = m.rows();
  MatFq aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field()->one();
  }
  const auto red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw Error("matrix is singular");
  MatFq out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = red.reduced(i, n + j);
  }
  return out;
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].code && b[i].code) s = f.add(s, f.mul(a[i], b[i]));
  }
  return s;
}

}  // namespace oigraph
