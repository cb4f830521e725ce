#pragma once

#include <optional>
#include <vector>

#include "orbitk/matroid.hpp"
#include "orbitk/ratmat.hpp"
#include "orbitk/schur.hpp"

namespace orbitk {

/// Rank-2 column configuration up to projective equivalence: each column is
/// assigned to a parallel class (1..m) or marked zero (0).
class Rank2Config {
public:
  static Rank2Config from_classes(std::vector<int> column_class);
  static Rank2Config from_mu(const Partition& mu);  // canonical blocks, no zeros
  static Rank2Config from_matrix(const RationalMatrix& v);

  int n() const { return static_cast<int>(column_class_.size()); }
  int num_classes() const;
  int zero_columns() const;
  const std::vector<int>& column_class() const { return column_class_; }
  Partition mu() const;  // multiplicities of the nonzero classes, sorted

  Matroid matroid() const;
  RationalMatrix realization() const;  // canonical integer realization

private:
  std::vector<int> column_class_;
};

/// K-polynomial of the uniform rank-2 orbit closure:
/// 1 - sum_{2<=l2, l1+l2<=n} (-1)^{|l|} s_l(1,1) s_l(u) e_{|l|}(t).
SchurExpansion k_uniform_rank2(int n);

/// Appends a t-variable and multiplies by prod_i (1 - u_i t_{n+1}).
SchurExpansion add_zero_column(const SchurExpansion& e);

/// Demazure step turning a trailing zero column into a duplicate of the
/// column before it: delta_{n-1} on the monomial form, re-expanded.
SchurExpansion duplicate_last_column(const SchurExpansion& e);

/// The rank-2 engine (normative): uniform class on the class
/// representatives, then one Demazure duplication per extra column, then a
/// zero-column factor per zero column; result independent of insertion
/// order.
SchurExpansion k_rank2(const Rank2Config& cfg);

/// Rank-1 all-parallel configuration on n nonzero columns (the rank <= 1
/// determinantal locus in the 2 x n matrix space), via stabilization of 1.
SchurExpansion k_rank1_parallel(int n);

/// Literal transcription of the printed rank-2 closed form, cases (1)-(4);
/// compare_rank2_closed_form reports where it deviates from the engine.
SchurExpansion k_rank2_closed_form_as_printed(const Rank2Config& cfg);

struct CoeffDiscrepancy {
  ExpVec beta;
  int k = 0;
  Int printed;
  Int normative;
};
std::vector<CoeffDiscrepancy> compare_rank2_closed_form(const Rank2Config& cfg);

/// K of a concatenated direct sum: raise each factor into r1+r2 u-variables
/// and multiply with disjoint t-labels.
SchurExpansion k_direct_sum(const SchurExpansion& e1, const SchurExpansion& e2);

/// Class of the GL_{r+1}-saturated closure: rho(e).
SchurExpansion k_stabilize(const SchurExpansion& e);

/// Coefficient of t^beta in e / prod(1 - u_i t_j), as a t-free expansion:
/// the character of the tensor module of the beta-fold parallel extension.
SchurExpansion hilbert_coefficient(const SchurExpansion& e, const ExpVec& beta);

/// prod_j (1 - q t_j) * Z~_M(-1/q; -t) reduced mod <t_j^2>: the hook-shape
/// enumerator of the K-class.  Shape {0, n, q}.
LaurentPoly hook_enumerator_fakedep(const Matroid& m);

/// The printed Dep polynomial: 1 + sum over dependent beta of
/// (-1)^{rk} q^{rk-1} (q+1) t^beta.
LaurentPoly dep_polynomial_as_printed(const Matroid& m);

/// Coefficient of s_{(|beta|-k+1, 1^{k-1})}(u) t^beta in e.
Int hook_coefficient(const SchurExpansion& e, int k, const ExpVec& beta);

/// Hook coefficients hidden in a FakeDep enumerator: the coefficient of
/// t^beta, divided exactly by (q+1), read off as {k -> coeff of q^{k-1}}.
/// Errors "not_divisible" when the (q+1)-divisibility contract fails.
std::map<int, Int> fakedep_hook_coefficients(const LaurentPoly& fakedep,
                                             const ExpVec& beta);

/// Per-(beta, k) comparison of FakeDep (normative) against the printed Dep
/// polynomial and against the printed hook-coefficient statement
/// ((-1)^k on rank k-1 dependent sets).
struct HookReport {
  std::vector<CoeffDiscrepancy> dep_vs_fakedep;      // exponent convention
  std::vector<CoeffDiscrepancy> printed_vs_fakedep;  // sign/magnitude
};
HookReport hook_discrepancy_report(const Matroid& m);

}  // namespace orbitk
