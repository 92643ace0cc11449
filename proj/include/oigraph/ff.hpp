#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oigraph {

/// Raised for malformed input: bad field parameters, shape mismatches,
/// division by zero and similar contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A field element, stored as its packed coefficient vector
/// c0 + c1*p + ... + c_{e-1}*p^{e-1} over the owning field's basis 1, t, t^2, ...
/// The value is only meaningful together with its Field.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^e} for an odd prime p, realised as F_p[t]/(modulus).
///
/// All arithmetic is table driven. The field is immutable once built and can be
/// shared across threads without synchronisation.
class Field {
 public:
  /// Builds F_{p^e}. Without an explicit modulus the lexicographically least
  /// monic irreducible of degree e is used, comparing coefficient lists
  /// (c0, c1, ..., c_{e-1}) with c0 most significant.
  static FieldPtr make(std::uint32_t p, std::uint32_t e,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Parses "p" or "p^e".
  static FieldPtr parse(std::string_view spec,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus as ascending coefficient list of length e+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool default_modulus() const { return default_modulus_; }
  /// "p" or "p^e".
  std::string descriptor() const;

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(long long v) const;
  Elem from_code(std::uint32_t code) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  Elem add(Elem a, Elem b) const {
    if (add_table_.empty()) return add_slow(a, b);
    return Elem{add_table_[a.code * q_ + b.code]};
  }
  Elem neg(Elem a) const { return Elem{neg_table_[a.code]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return Elem{0};
    std::uint32_t s = log_[a.code] + log_[b.code];
    if (s >= q_ - 1) s -= q_ - 1;
    return Elem{exp_[s]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// Nonzero squares; throws on zero.
  bool is_square(Elem a) const;
  /// Same predicate through the Euler criterion a^((q-1)/2) == 1.
  bool is_square_euler(Elem a) const;
  /// The non-square least in lexicographic coefficient order.
  Elem canonical_nonsquare() const { return nonsquare_; }
  /// The square root of a nonzero square that is least in lexicographic
  /// coefficient order.
  Elem sqrt_of_square(Elem a) const;
  /// a^(p^j) for 0 <= j < e.
  Elem frobenius(Elem a, std::uint32_t j) const;

  /// Rank of a in the lexicographic order of coefficient lists (c0 first).
  std::uint32_t order_key(Elem a) const { return order_key_[a.code]; }
  bool lex_less(Elem a, Elem b) const { return order_key(a) < order_key(b); }

  /// A fixed generator of the multiplicative group.
  Elem primitive() const { return Elem{exp_[1 % (q_ - 1)]}; }
  /// All nonzero elements in code order.
  std::vector<Elem> nonzero_elements() const;

  /// Human readable form, e.g. "2", "t", "1+2t^2".
  std::string to_string(Elem a) const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus, bool is_default);

  Elem add_slow(Elem a, Elem b) const;
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool default_modulus_;

  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> square_;
  std::vector<std::uint32_t> order_key_;
  Elem nonsquare_;
};

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial (ascending coefficients) is irreducible over F_p.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Lexicographically least monic irreducible of degree e over F_p.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t e);

/// An element bundled with its field; arithmetic checks that both operands
/// live in the same field.
class FieldElem {
 public:
  FieldElem(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const { return {field_, field_->neg(value_)}; }
  FieldElem inverse() const { return {field_, field_->inv(value_)}; }

  bool operator==(const FieldElem& o) const {
    return field_->same_as(*o.field_) && value_ == o.value_;
  }

 private:
  const Field& common(const FieldElem& o) const;

  FieldPtr field_;
  Elem value_;
};

}  // namespace oigraph
