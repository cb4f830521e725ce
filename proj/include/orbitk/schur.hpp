#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbitk/laurent.hpp"
#include "orbitk/partition.hpp"

namespace orbitk {

/// Schur polynomial s_lambda(u_1..u_m) as the SSYT generating sum; zero when
/// lambda has more than m rows.  Memoized, safe for concurrent readers.
LaurentPoly schur_poly(const Partition& lambda, int m);

/// Symbolic evaluation of the determinantal ratio for an arbitrary integer
/// sequence: sign = 0 means the determinant vanishes (repeated exponents),
/// otherwise s_seq = sign * s_lambda in length(seq) variables.
struct Straightened {
  int sign = 0;
  Partition lambda;
};
Straightened schur_straighten(const std::vector<int>& seq);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}.
Int lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Finite linear combination of s_lambda(u_1..u_r) t^a with big-integer
/// coefficients: the canonical form of K-classes, cohomology classes and
/// characters.  Canonical: no zero coefficients.  Engine operations keep
/// partition lengths <= r; omega_transpose may exceed it and the caller
/// truncates explicitly.
class SchurExpansion {
public:
  using Key = std::pair<Partition, ExpVec>;

  SchurExpansion() = default;
  SchurExpansion(int r, int n) : r_(r), n_(n) {}

  static SchurExpansion one(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Int coeff(const Partition& lambda, const ExpVec& t) const;
  void add_term(const Partition& lambda, const ExpVec& t, const Int& c);

  SchurExpansion operator-() const;
  SchurExpansion& operator+=(const SchurExpansion& g);
  SchurExpansion& operator-=(const SchurExpansion& g);
  friend SchurExpansion operator+(SchurExpansion f, const SchurExpansion& g) { return f += g; }
  friend SchurExpansion operator-(SchurExpansion f, const SchurExpansion& g) { return f -= g; }

  bool operator==(const SchurExpansion&) const = default;

  /// Monomial form: each s_lambda(u) expanded, times t^a.  Partitions longer
  /// than r contribute nothing.
  LaurentPoly to_poly() const;

  /// Same terms viewed with a larger t-arity (exponent vectors padded).
  SchurExpansion extended_to_n(int n2) const;

  /// t_j -> t_{new_index_of_old[j-1]} (1-based targets, a permutation).
  SchurExpansion relabel_t(const std::vector<int>& new_index_of_old) const;

  /// Drop terms whose partition has more than r parts.
  SchurExpansion truncated_to_r() const;

  bool t_square_free() const;

  std::string to_string() const;

private:
  int r_ = 0, n_ = 0;
  std::map<Key, Int> terms_;
};

/// Unique Schur-basis expansion of a u-symmetric polynomial, by repeated
/// subtraction of the leading term's Schur polynomial.  Errors with
/// "not_symmetric" if f is not symmetric in u_1..u_r.
SchurExpansion schur_expand(const LaurentPoly& f, int r);

/// Product re-expanded via LR coefficients; partitions longer than r drop.
SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b);

/// s_lambda -> s_{lambda'} termwise; lengths may exceed r afterwards.
SchurExpansion omega_transpose(const SchurExpansion& e);

/// Expansion of s_nu over a disjoint union of alphabets:
/// s_nu(A_1 u ... u A_k) = sum c^nu_{mu_1..mu_k} prod s_{mu_i}(A_i).
/// Tuples where some mu_i has more rows than |A_i| are dropped.
std::map<std::vector<Partition>, Int> schur_over_alphabets(
    const Partition& nu, const std::vector<int>& alphabet_sizes);

/// Demazure operator on the t variables:
/// (t_i f - t_{i+1} sigma_i f) / (t_i - t_{i+1}).
LaurentPoly demazure(int i, const LaurentPoly& f);

/// Raising operator: append k to each index vector and straighten in r+1
/// variables (the determinantal formula is normative), t-linearly.
SchurExpansion rho_k(int k, const SchurExpansion& e);

/// rho = sum_{k=0..n} (-1)^k e_k(t) rho_k.
SchurExpansion rho(const SchurExpansion& e);

/// Cohomological raising rho_H^{(c)} =
/// (-1)^{cr} e_{r+c}(u)^{-c} sum e_{k_1}(t)..e_{k_c}(t) rho_{n+c-k_c}..rho_{n+c-k_1},
/// the division implemented by subtracting c from every part.
SchurExpansion rho_H(int c, const SchurExpansion& e);

}  // namespace orbitk
