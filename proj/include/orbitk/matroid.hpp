#pragma once

#include <cstdint>
#include <vector>

#include "orbitk/laurent.hpp"
#include "orbitk/partition.hpp"
#include "orbitk/ratmat.hpp"

namespace orbitk {

/// Matroid on ground set [n] (internally 0-based bitmasks), stored by its
/// basis collection.  Immutable after validation; ground sets up to n = 16.
class Matroid {
public:
  /// Validates cardinality and the basis-exchange axiom; the error message
  /// carries a witness pair on failure.
  static Matroid from_bases(int n, std::vector<uint32_t> bases);

  /// Column matroid of an exact rational matrix.
  static Matroid from_matrix(const RationalMatrix& v);

  static Matroid uniform(int r, int n);

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<uint32_t>& bases() const { return bases_; }

  int rank_of(uint32_t subset) const;
  bool independent(uint32_t subset) const;
  bool is_basis(uint32_t subset) const;
  bool is_loop(int e) const;
  bool loopless() const;

  Matroid dual() const;
  Matroid restrict_to(uint32_t J) const;  // ground set relabeled to [popcount(J)]
  Matroid contract(uint32_t J) const;     // ground set = complement, relabeled
  Matroid delete_elems(uint32_t D) const;
  Matroid direct_sum(const Matroid& other) const;
  Matroid truncate(int k) const;  // errors when k > rank

  /// Ground-set partition into connected components (loops and coloops are
  /// singleton components).
  std::vector<uint32_t> connected_components() const;

  /// Partition whose k-th partial sum is the largest union of k independent
  /// sets, via min_{A}(|E \ A| + k rk(A)).
  Partition rank_partition() const;

  std::vector<uint32_t> circuits() const;

  /// Circuits minus their smallest element in the given order (default the
  /// natural order; `order[i]` = rank of element i, lower = earlier).
  std::vector<uint32_t> broken_circuits(const std::vector<int>& order = {}) const;
  std::vector<uint32_t> nbc_sets(const std::vector<int>& order = {}) const;
  long nbc_bases_of_truncation(int k) const;

  /// Deletion-contraction; shape {u_count=2} with u1 = x, u2 = y.
  LaurentPoly tutte() const;

  /// Sokal's Z~(q; t) = sum_{b in {0,1}^n} q^{-rk(b)} t^b; shape {0, n, q}.
  LaurentPoly multivariate_tutte() const;

  /// Sorted sizes of rank-one flats; requires rank 2 and no loops.
  Partition parallelism_partition() const;

  /// Direct sum of (M|S_i)/S_{i-1} over a strictly nested flag, on the same
  /// ground set: bases of M with |B & S_i| = rk(S_i) for all i.
  Matroid face_matroid(const std::vector<uint32_t>& flag) const;

  std::vector<std::vector<int>> polytope_vertices() const;

  /// Rank-inequality membership test for the base polytope.
  bool polytope_contains(const std::vector<Rat>& x) const;

  bool operator==(const Matroid&) const = default;

private:
  Matroid() = default;
  int n_ = 0, rank_ = 0;
  std::vector<uint32_t> bases_;  // sorted
};

/// Point-sampling check of [P(parent)] = sum_i sign_i [P(M_i)] on every
/// point with coordinates in {0, 1/2, 1} and `extra_points` random rational
/// points of the parent polytope.  A heuristic validation, not a decision
/// procedure.
bool subdivision_check(const Matroid& parent,
                       const std::vector<std::pair<Matroid, int>>& cells,
                       uint64_t seed = 1, int extra_points = 200);

}  // namespace orbitk
