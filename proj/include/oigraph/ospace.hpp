#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "oigraph/ff.hpp"
#include "oigraph/matfq.hpp"

namespace oigraph {

/// Which definite block sits below the hyperbolic part of the form matrix.
enum class DiscVariant {
  none,  // delta = 0
  one,   // delta = 1, block (1)
  z,     // delta = 1, block (z)
  fixed  // delta = 2, block diag(1, -z)
};

std::string to_string(DiscVariant d);
DiscVariant parse_disc(const std::string& s);

class SpaceDescriptor;
using SpacePtr = std::shared_ptr<const SpaceDescriptor>;

/// F_q^(2nu+delta) with the symmetric form x S y^T, where S is the
/// antidiagonal pair of identity blocks followed by the definite block.
class SpaceDescriptor {
 public:
  /// `disc` may be left as none for delta = 2; it is then set to fixed.
  static SpacePtr make(int nu, int delta, DiscVariant disc, FieldPtr field);

  int nu() const { return nu_; }
  int delta() const { return delta_; }
  DiscVariant disc() const { return disc_; }
  std::size_t n() const { return n_; }
  const FieldPtr& field() const { return field_; }
  const MatFq& form() const { return form_; }
  /// The fixed non-square z.
  Elem z() const { return field_->canonical_nonsquare(); }

  /// Coordinate indices (0-based) of e_i, f_i (1 <= i <= nu), epsilon and kappa.
  std::size_t e(int i) const { return static_cast<std::size_t>(i - 1); }
  std::size_t f(int i) const { return static_cast<std::size_t>(nu_ + i - 1); }
  std::size_t epsilon() const;
  std::size_t kappa() const;

  /// Unit row vector for coordinate index c.
  MatFq unit(std::size_t c) const;

  /// x S y^T for two row vectors.
  Elem pair(std::span<const Elem> x, std::span<const Elem> y) const;

  /// "Oi(4,3)" style label with the disc variant for delta = 1.
  std::string label() const;

 private:
  SpaceDescriptor(int nu, int delta, DiscVariant disc, FieldPtr field);

  int nu_;
  int delta_;
  DiscVariant disc_;
  std::size_t n_;
  FieldPtr field_;
  MatFq form_;
};

/// Square class tag of a one-dimensional anisotropic residual.
enum class Gamma { absent, one, z };

/// Type (m, 2s+gamma, s, Gamma) of a subspace: dimension, rank of the
/// restricted form, its Witt index and the residual square class when gamma = 1.
struct SubspaceType {
  int m = 0;
  int rank = 0;
  int s = 0;
  Gamma tag = Gamma::absent;

  int gamma() const { return rank - 2 * s; }
  std::string to_string() const;

  friend auto operator<=>(const SubspaceType&, const SubspaceType&) = default;
  friend bool operator==(const SubspaceType&, const SubspaceType&) = default;
};

/// A nonzero subspace of the ambient space held as its RREF basis.
/// Vertices are the proper ones; the full space only arises from sums.
class Subspace {
 public:
  Subspace() = default;

  /// Canonicalises `rows`. Rejects the zero space and the full space.
  static Subspace make(SpacePtr space, const MatFq& rows);
  /// Wraps a matrix already known to be in RREF with no zero rows.
  static Subspace from_rref(SpacePtr space, MatFq basis);

  const SpacePtr& space() const { return space_; }
  const MatFq& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_vertex() const { return dim() >= 1 && dim() < space_->n(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(SpacePtr space, MatFq basis) : space_(std::move(space)), basis_(std::move(basis)) {}

  SpacePtr space_;
  MatFq basis_;
};

struct WittDecomposition {
  int rank = 0;
  int s = 0;
  int gamma = 0;
  Gamma tag = Gamma::absent;
};

/// Witt decomposition of the form with Gram matrix G: splits off hyperbolic
/// planes until at most a two-dimensional anisotropic residual remains.
WittDecomposition witt_decompose(const MatFq& gram);

/// Witt index of the nondegenerate part of G found by exhaustive search for
/// totally isotropic subspaces. Throws BudgetError when q^m > 10^6.
int witt_bruteforce_oracle(const MatFq& gram);

/// P S P^T.
MatFq gram(const Subspace& p);
Subspace dual(const Subspace& p);
SubspaceType classify_type(const Subspace& p);
/// 1 if det(gram(P)) is a square, 0 if not; throws when gram(P) is singular.
int disc_square_class(const Subspace& p);
/// X1 + X2; may be the full space, in which case is_vertex() is false.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& big, const Subspace& small);

/// Number of m-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t m, std::uint64_t q);

/// Visits every m-dimensional subspace once, ordered by pivot-column set
/// (lexicographic) and then by the free entries as an odometer.
void enumerate_subspaces(const SpacePtr& space, std::size_t m,
                         const std::function<void(const Subspace&)>& visit);
std::vector<Subspace> all_subspaces(const SpacePtr& space, std::size_t m);

/// Exhaustive count of m-dimensional subspaces per type.
std::map<SubspaceType, std::uint64_t> count_by_type(const SpacePtr& space, std::size_t m,
                                                    std::uint64_t budget = 2'000'000);

/// Unordered pair of endpoint types plus the type of the sum.
struct EdgeTypeTriple {
  SubspaceType low;
  SubspaceType high;
  SubspaceType sum;
  bool sum_is_vertex = true;

  static EdgeTypeTriple of(const Subspace& x1, const Subspace& x2);
  std::string to_string() const;

  friend auto operator<=>(const EdgeTypeTriple&, const EdgeTypeTriple&) = default;
  friend bool operator==(const EdgeTypeTriple&, const EdgeTypeTriple&) = default;
};

}  // namespace oigraph
