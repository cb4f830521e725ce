#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitk/matroid.hpp"
#include "orbitk/ratmat.hpp"
#include "orbitk/schur.hpp"

namespace orbitk {

/// Monomial in the coordinate ring k[x_ij : i <= r, j <= n], exponents
/// stored row-major (variable index (i-1)*n + (j-1)).
using XMono = std::vector<int>;

/// Polynomial in the x_ij with rational coefficients, homogeneous for the
/// Z^r x Z^n grading deg(x_ij) = a_i + b_j (checked by make_graded_poly).
struct GradedPoly {
  int r = 0, n = 0;
  std::map<XMono, Rat> terms;

  bool is_zero() const { return terms.empty(); }
};

GradedPoly make_graded_poly(int r, int n, std::map<XMono, Rat> terms);

/// u- and t-weight of a monomial under deg(x_ij) = a_i + b_j.
std::pair<ExpVec, ExpVec> xmono_weight(int r, int n, const XMono& m);

struct IdealPresentation {
  int r = 0, n = 0;
  std::vector<GradedPoly> gens;
  std::string provenance;  // "iprime" | "idoubleprime" | "minors" | "custom"
};

/// Gale dual: rows span the right kernel of v, as a (cols-rank) x cols
/// exact matrix (empty when v has full column rank).
RationalMatrix gale_dual(const RationalMatrix& v);

/// Set-theoretic generators of the orbit closure ideal: size-|J| minors of
/// x_J (x) v_J-perp over all column subsets J (dependent J only; blocks with
/// fewer rows than |J| impose nothing).
IdealPresentation iprime_generators(const RationalMatrix& v);

/// For rank-2 uniform v: size-4 minors of the 4-by-n matrix x (x) v, the
/// cross-ratio quartics.
IdealPresentation idoubleprime_generators(const RationalMatrix& v);

/// 2x2 minors of the generic r x n coordinate matrix (rank <= 1 locus).
IdealPresentation generic_minors_ideal(int r, int n);

struct GroebnerOptions {
  long step_cap = 2'000'000;  // pair reductions; "resource_cap" beyond
};

/// Reduced Groebner basis for graded reverse lexicographic order on
/// x_11 > x_12 > ... > x_rn.
std::vector<GradedPoly> buchberger(const IdealPresentation& ideal,
                                   const GroebnerOptions& opts = {});

struct QuotientData {
  SchurExpansion k_polynomial;     // K-numerator of R/I in the Schur basis
  int dimension = 0;               // Krull dimension of R/I
  long degree = 0;                 // degree of the projective variety
  size_t groebner_size = 0;
  bool initial_ideal_squarefree = false;
};

/// K-polynomial, dimension and degree of R/I computed from the initial
/// ideal of a Groebner basis (flatness of the Groebner degeneration).
QuotientData quotient_data(const IdealPresentation& ideal,
                           const GroebnerOptions& opts = {});

SchurExpansion k_polynomial_of_quotient(const IdealPresentation& ideal,
                                        const GroebnerOptions& opts = {});
int dimension_of_quotient(const IdealPresentation& ideal,
                          const GroebnerOptions& opts = {});

/// Normal form of f modulo a Groebner basis.
GradedPoly normal_form(const GradedPoly& f, const std::vector<GradedPoly>& gb);

/// w in X_v iff for every J the tensors w_ji (x) (v_J-perp)_i are linearly
/// dependent; exact elimination, no ideal computation.
bool membership_test(const RationalMatrix& w, const RationalMatrix& v);

}  // namespace orbitk
