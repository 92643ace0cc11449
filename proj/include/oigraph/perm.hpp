#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oigraph {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation of {0..n-1} as an image array; points act on the right.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
bool is_identity(const Perm& p);
/// Apply a, then b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_permutation(const Perm& p);

/// Schreier-Sims stabilizer chain. The base is extended with the smallest
/// point moved by a new strong generator, so results depend only on the
/// generator list.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);

  std::size_t degree() const { return degree_; }
  BigInt order() const;
  const std::vector<std::uint32_t>& base() const { return base_; }
  std::vector<std::size_t> transversal_sizes() const;
  const std::vector<Perm>& strong_generators() const { return strong_; }
  bool contains(const Perm& p) const;

 private:
  struct Coset {
    Perm u;      // base point -> orbit point
    Perm u_inv;
  };
  struct Level {
    std::vector<std::size_t> gens;  // indices into strong_
    std::vector<std::uint32_t> orbit;
    std::unordered_map<std::uint32_t, Coset> transversal;
    std::unordered_set<std::uint64_t> checked;  // (point, generator) pairs already sifted
  };

  /// Sifts p from level `from`; returns the residue and the level it stopped at.
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;
  void add_base_point(const Perm& moving);
  void add_strong_generator(Perm g);
  void extend_orbit(std::size_t level);
  void run();

  std::size_t degree_;
  std::vector<std::uint32_t> base_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  void unite(std::size_t a, std::size_t b);
  /// Classes, each sorted, ordered by least element.
  std::vector<std::vector<std::size_t>> classes();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Orbit partition of {0..n-1} under the generators.
std::vector<std::vector<std::size_t>> orbits(std::size_t degree, const std::vector<Perm>& generators);

}  // namespace oigraph
