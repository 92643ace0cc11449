#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oigraph/ff.hpp"

namespace oigraph {

/// Dense row-major matrix over a finite field.
class MatFq {
 public:
  MatFq() = default;
  MatFq(FieldPtr field, std::size_t rows, std::size_t cols);
  MatFq(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static MatFq identity(FieldPtr field, std::size_t n);
  /// Builds a matrix from small integers, reduced into the prime subfield.
  static MatFq from_ints(FieldPtr field, const std::vector<std::vector<long long>>& rows);
  /// Builds a matrix from packed element codes.
  static MatFq from_codes(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);
  static MatFq diagonal(FieldPtr field, const std::vector<Elem>& diag);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  MatFq transpose() const;
  MatFq operator*(const MatFq& other) const;
  MatFq operator-() const;
  /// Rows [first, first+count).
  MatFq row_block(std::size_t first, std::size_t count) const;
  /// Stacks the rows of this matrix over the rows of `below`.
  MatFq stack(const MatFq& below) const;

  std::vector<std::vector<std::uint32_t>> to_codes() const;
  std::string to_string() const;

  friend bool operator==(const MatFq& a, const MatFq& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  MatFq reduced;  // zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are taken as the first nonzero entry found
/// scanning down each column, so the output is the unique RREF of the row space.
RrefResult rref(const MatFq& m);

/// Canonical (RREF) basis of the left kernel {x : x * M = 0}.
MatFq kernel(const MatFq& m);

struct Congruence {
  MatFq diagonal;   // D
  MatFq transform;  // Q with Q * G * Q^T = D
};

/// Symmetric congruence diagonalisation over odd characteristic.
Congruence congruence_diagonalize(const MatFq& g);

Elem determinant(const MatFq& m);
MatFq inverse(const MatFq& m);

/// Dot product of two equal-length vectors.
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace oigraph
