#pragma once

#include <functional>
#include <map>
#include <vector>

#include "orbitk/matroid.hpp"
#include "orbitk/schur.hpp"

namespace orbitk {

/// Term of K(X; 1-u, 1-t) of total degree codim, re-expanded in the Schur
/// basis.  Errors "below_codim" when lower-degree terms survive (wrong
/// codimension supplied).
SchurExpansion multidegree(const SchurExpansion& e, int codim);

/// codim X_v = rn - (r^2 + n - c) for a rank-r matroid with c connected
/// components.
int codim_matrix_orbit(const Matroid& m, int r);

/// Equivariant cohomology class of the generic (uniform-matroid) orbit:
/// bundle form as pairs (lambda on S-dual, partition on Q) and the (u,t)
/// Schur expansion sum c^{lambda~}_{mu nu} s_lambda(u) s_{mu'}(t) s_nu(u).
struct UniformClass {
  std::vector<std::pair<Partition, Partition>> bundle_pairs;
  SchurExpansion in_ut;
};
UniformClass uniform_class_grassmannian(int r, int n);

/// Closed-form localization of the uniform class at the fixed point x_B:
/// prod_{i in B, j not in B}(t_j - t_i) *
/// sum_{i_r in B} prod_{i in B\i_r} 1/(t_{i_r}-t_i) prod_{j notin B} 1/(t_j - t_{i_r}).
Rat localize_uniform_closed(const std::vector<int>& B, int r, int n,
                            const std::vector<Rat>& t);

/// Localization of the orbit-closure class by the permutation sum over
/// permutations whose greedy lex-first basis is B; zero when B is not a
/// basis.  n <= 9.
Rat localize_orbit_via_permutations(const Matroid& m, const std::vector<int>& B,
                                    const std::vector<Rat>& t);

/// K-theoretic localization at x_B by Brion's formula over the same
/// permutation fan.
Rat klocalize_orbit(const Matroid& m, const std::vector<int>& B,
                    const std::vector<Rat>& t);

/// Localization table: fixed points B (r-subsets of [n], 1-based sorted)
/// to polynomial restrictions f_B in t.
class Localization {
public:
  Localization(int r, int n) : r_(r), n_(n) {}
  int r() const { return r_; }
  int n() const { return n_; }
  std::map<std::vector<int>, LaurentPoly>& entries() { return entries_; }
  const std::map<std::vector<int>, LaurentPoly>& entries() const { return entries_; }

private:
  int r_, n_;
  std::map<std::vector<int>, LaurentPoly> entries_;
};

/// Reconstruct every f_B as a homogeneous degree-`degree` polynomial from
/// point evaluations, with a fixed seeded point generator (coordinates in
/// {1..10^4}, distinct).  Errors "interpolation" when the system is
/// degenerate or the evaluations are inconsistent with the degree bound.
Localization interpolate_localization(
    int r, int n, int degree,
    const std::function<Rat(const std::vector<int>&, const std::vector<Rat>&)>& eval,
    uint64_t seed);

/// GKM edge condition: f_B - f_{B u j \ i} divisible by t_j - t_i for all
/// i in B, j not in B.
bool gkm_check(const Localization& loc);

/// Degree of the generic orbit closure:
/// sum_{lambda in rectangle} s_lambda(1^r) s_{lambda~}(1^r).
long degree_uniform(int r, int n);

/// 180-degree rotated complement within the (r-1) x (n-r-1) rectangle.
Partition rectangle_complement(const Partition& lambda, int rows, int cols);

/// All r-subsets of [n] (1-based, sorted).
std::vector<std::vector<int>> r_subsets(int r, int n);

/// Localization of a (u,t) class at x_B: u-Schur factors evaluate at
/// {-t_i : i in B}.
Rat localize_ut_class(const SchurExpansion& e, const std::vector<int>& B,
                      const std::vector<Rat>& t);

}  // namespace orbitk
