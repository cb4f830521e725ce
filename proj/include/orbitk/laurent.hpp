#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitk/numeric.hpp"

namespace orbitk {

using ExpVec = std::vector<int>;

/// Variable layout of a LaurentPoly: u_1..u_r, then t_1..t_n, then an
/// optional auxiliary variable q.  Exponent vectors are dense of length
/// size() in that order.
struct VarShape {
  int u_count = 0;
  int t_count = 0;
  bool has_q = false;

  int size() const { return u_count + t_count + (has_q ? 1 : 0); }
  int u_pos(int i) const { return i - 1; }            // 1-based
  int t_pos(int j) const { return u_count + j - 1; }  // 1-based
  int q_pos() const { return u_count + t_count; }

  bool operator==(const VarShape&) const = default;
};

/// Sparse exact Laurent polynomial over arbitrary-precision integers.
/// Canonical form: no stored term has zero coefficient, so equality of the
/// term maps is equality of polynomials.  Values are immutable in spirit:
/// every operation returns a fresh polynomial.
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(VarShape shape) : shape_(shape) {}

  static LaurentPoly constant(VarShape shape, Int c);
  static LaurentPoly monomial(VarShape shape, const ExpVec& e, Int c = 1);
  static LaurentPoly u_var(VarShape shape, int i);
  static LaurentPoly t_var(VarShape shape, int j);
  static LaurentPoly q_var(VarShape shape);

  const VarShape& shape() const { return shape_; }
  const std::map<ExpVec, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const ExpVec& e) const;
  Int constant_coeff() const;

  void add_term(const ExpVec& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const Int& c, const LaurentPoly& f);

  bool operator==(const LaurentPoly&) const = default;

  /// Total degree of each term must be >= 0 for polynomial semantics.
  bool has_negative_exponents() const;

  int min_total_degree() const;  // of a nonzero poly
  int max_total_degree() const;

  /// Keep only the terms of the given total degree.
  LaurentPoly total_degree_part(int d) const;

  /// Substitute t_i <-> t_{i+1} (1-based i within the t block).
  LaurentPoly swap_t(int i) const;

  /// Relabel t-variables: new exponent of t_{perm[j]} = old exponent of
  /// t_{j+1} (perm is 0-based old index -> 1-based new index... see impl).
  LaurentPoly relabel_t(const std::vector<int>& new_index_of_old) const;

  /// Rendering with default names u1..ur, t1..tn, q; terms sorted by
  /// exponent vector.  Optional override for variable names.
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& names) const;

private:
  VarShape shape_;
  std::map<ExpVec, Int> terms_;
};

/// Quotient h with f = g*h, or error "not_divisible".
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);

/// Replace every u_i by 1-u_i and t_j by 1-t_j; requires a genuine
/// polynomial (no negative exponents) and no q variable in use.
LaurentPoly substitute_affine(const LaurentPoly& f);

/// prod_{i<=r, j<=n} (sum_{d=0..bound_j} u_i^d t_j^d): the expansion of
/// 1/prod(1-u_i t_j) exact in every t_j-degree <= bound_j.
LaurentPoly truncated_geometric_product(int r, const ExpVec& bound);

/// Elementary symmetric polynomial e_k of the t-variables, as a poly of the
/// given shape.
LaurentPoly elementary_symmetric_t(VarShape shape, int k);

}  // namespace orbitk
