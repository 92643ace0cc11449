#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oigraph/graph.hpp"
#include "oigraph/perm.hpp"

namespace oigraph {

/// T with T S T^T = S.
bool is_orthogonal(const SpaceDescriptor& space, const MatFq& t);

/// x -> x - 2 (x S v^T / v S v^T) v as a matrix acting on row vectors.
/// Throws for isotropic v.
MatFq reflection(const SpaceDescriptor& space, const MatFq& v);

/// One reflection per projective anisotropic point, in enumeration order.
std::vector<MatFq> orthogonal_generators(const SpacePtr& space);

/// Vertex permutation v -> <basis(v) T>. Throws unless T is orthogonal.
Perm perm_from_matrix(const OiGraph& g, const MatFq& t);

/// Parameters of x -> frob^j(x) D with D = diag(k_1..k_nu, k_1^-1..k_nu^-1, d_1, d_2).
struct SemilinearTuple {
  std::vector<Elem> k;  // k_1 must be a nonzero square
  int delta1 = 1;       // sign of the first definite slot, delta >= 1
  int delta2 = 1;       // sign of the second definite slot, delta = 2
  std::uint32_t frob = 0;
};

/// Diagonal part D. The definite slot with entry c gets
/// delta_j * sqrt(frob(c) / c), which is +-1 whenever frob fixes c.
MatFq semilinear_diagonal(const SpaceDescriptor& space, const SemilinearTuple& tuple);

Perm perm_from_semilinear(const OiGraph& g, const SemilinearTuple& tuple);

/// Generators of the subgroup fixing every standard basis vertex: a square
/// generator on k_1, a primitive element on each k_i (i >= 2), sign flips on
/// the definite slots and the Frobenius map. Identity tuples are omitted.
std::vector<SemilinearTuple> e_generators(const SpaceDescriptor& space);

/// Reflection and E generators as vertex permutations (identities dropped).
std::vector<Perm> po_e_generators(const OiGraph& g);
std::vector<Perm> e_perm_generators(const OiGraph& g);

struct GroupSummary {
  BigInt order;
  std::vector<std::uint32_t> base;
  std::vector<std::size_t> transversal_sizes;
};

GroupSummary group_order(const std::vector<Perm>& generators, std::size_t degree);

/// Order of a matrix group through its action on the nonzero vectors.
BigInt matrix_group_order(const SpaceDescriptor& space, const std::vector<MatFq>& generators);

std::vector<std::vector<std::size_t>> vertex_orbits(const OiGraph& g, const std::vector<Perm>& generators);

/// Adjacent unordered pairs (u <= v, loops as (v, v)) and their orbits as
/// index lists into `edges`.
struct EdgeOrbits {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> orbits;
};

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const OiGraph& g, bool with_loops = true);
EdgeOrbits edge_orbits(const OiGraph& g, const std::vector<Perm>& generators);

/// True iff the two partitions of the same ground set coincide.
bool same_partition(std::vector<std::vector<std::size_t>> a, std::vector<std::vector<std::size_t>> b);

/// Fibers of classify_type over the vertices.
std::vector<std::vector<std::size_t>> type_fibers(const OiGraph& g);
/// Fibers of EdgeTypeTriple over edge_list(g).
std::vector<std::vector<std::size_t>> edge_type_fibers(const OiGraph& g);

struct FormulaResult {
  std::optional<BigInt> value;  // empty when no closed form applies
  bool covered = false;         // the hypotheses of the closed form hold
  std::string branch;           // which closed form was evaluated
  std::string note;
};

/// Closed-form |Aut(Oi(2nu+delta, q))|.
FormulaResult aut_order_formula(int nu, int delta, const Field& field);

/// |E| = |F*^2| (q-1)^(nu-1) 2^delta [F_q:F_p] / |K|, where |K| = 2 iff -1 is a
/// square. Throws for nu < 2.
BigInt e_subgroup_order(const SpaceDescriptor& space);

}  // namespace oigraph
