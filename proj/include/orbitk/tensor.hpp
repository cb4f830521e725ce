#pragma once

#include <map>
#include <vector>

#include "orbitk/matroid.hpp"
#include "orbitk/ratmat.hpp"
#include "orbitk/schur.hpp"

namespace orbitk {

/// Character of the tensor module of a uniform rank-2 configuration:
/// s_(n) + sum_l (n-2l+1) s_(n-l,l).  t-free expansion (n() == 0).
SchurExpansion char_uniform_rank2(int n);

/// Character for parallelism partition mu:
/// s_(n) + sum_k max(mu'_1+..+mu'_k - 2k + 1, 0) s_(n-k,k).
SchurExpansion char_rank2(const Partition& mu);

/// Multiplicity of the hook (n-k+1, 1^{k-1}): nbc bases of the rank-k
/// truncation; zero past the rank.  Requires a loopless matroid.
long hook_multiplicity_nbc(const Matroid& m, int k);

/// (lhs, rhs) of sum_k nbc_k q^{k-1}(q+1) = q^{rk} T_M(1+1/q, 0), both as
/// polynomials in q (shape {0,0,q}).
std::pair<LaurentPoly, LaurentPoly> hook_generating_identity(const Matroid& m);

/// Dominance support condition: mu >= transpose(rank_partition(M)).
bool support_test(const Matroid& m, const Partition& mu);

/// Cyclic S_n-submodule of (k^r)^{(x)n} generated by the column tensor:
/// exact basis in the r^n coordinate space plus per-conjugacy-class traces.
struct SnModule {
  int n = 0, r = 0;
  std::vector<std::vector<Rat>> basis;  // rows, reduced echelon form
  std::map<Partition, Rat> class_traces;
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Spans {sigma . (v_1 (x) ... (x) v_n)} by exact row reduction; n <= 7.
SnModule schur_weyl_module(const RationalMatrix& v);

/// m_lambda = (1/n!) sum_sigma chi_lambda(sigma) trace(sigma); errors on a
/// non-integral multiplicity.
std::map<Partition, Int> sn_multiplicities(const SnModule& mod);

/// Irreducible S_n character chi_lambda at a conjugacy class, by the
/// Murnaghan-Nakayama rule (memoized).
Int mn_character(const Partition& lambda, const Partition& cls);

Int specht_dimension(const Partition& lambda);

/// Size of the conjugacy class of cycle type cls in S_n.
Int conjugacy_class_size(const Partition& cls);

}  // namespace orbitk
