#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbitk/laurent.hpp"

using namespace orbitk;

namespace {

const VarShape UT{1, 1, false};  // u1, t1

LaurentPoly U1(VarShape sh = UT) { return LaurentPoly::u_var(sh, 1); }
LaurentPoly T1(VarShape sh = UT) { return LaurentPoly::t_var(sh, 1); }
LaurentPoly one(VarShape sh = UT) { return LaurentPoly::constant(sh, 1); }

LaurentPoly random_poly(std::mt19937_64& rng, VarShape sh, int max_terms, int max_exp) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<int> coeff(-4, 4);
  LaurentPoly f(sh);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    ExpVec e(sh.size());
    for (int j = 0; j < sh.size(); ++j) e[j] = expd(rng);
    f.add_term(e, coeff(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("addition") {
  CHECK((U1() + (-U1())).is_zero());
  LaurentPoly f = one() + T1();
  CHECK(f.coeff(ExpVec{0, 0}) == 1);
  CHECK(f.coeff(ExpVec{0, 1}) == 1);
  LaurentPoly u1t1 = U1() * T1();
  CHECK((one() - u1t1) + u1t1 == one());
  LaurentPoly other{VarShape{2, 0, false}};
  CHECK_THROWS_WITH_AS((void)(one() + other), doctest::Contains("arity"), Error);
}

TEST_CASE("multiplication") {
  LaurentPoly u1t1 = U1() * T1();
  LaurentPoly f = (one() - u1t1) * (one() + u1t1);
  CHECK(f == one() - u1t1 * u1t1);

  VarShape tt{0, 2, false};
  LaurentPoly t1 = LaurentPoly::t_var(tt, 1);
  LaurentPoly t2 = LaurentPoly::t_var(tt, 2);
  CHECK((t1 - t2) * (t1 + t2) == t1 * t1 - t2 * t2);

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    LaurentPoly f2 = random_poly(rng, UT, 5, 3);
    CHECK(f2 * one() == f2);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(17);
  VarShape sh{1, 2, false};
  for (int rep = 0; rep < 25; ++rep) {
    LaurentPoly f = random_poly(rng, sh, 4, 2);
    LaurentPoly g = random_poly(rng, sh, 4, 2);
    LaurentPoly h = random_poly(rng, sh, 4, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
  }
}

TEST_CASE("exact division") {
  VarShape tt{0, 2, false};
  LaurentPoly t1 = LaurentPoly::t_var(tt, 1);
  LaurentPoly t2 = LaurentPoly::t_var(tt, 2);
  CHECK(exact_divide(t1 * t1 - t2 * t2, t1 - t2) == t1 + t2);
  CHECK(exact_divide(t1 - t2, t1 - t2) == LaurentPoly::constant(tt, 1));
  CHECK_THROWS_WITH_AS((void)exact_divide(t1 * t2, t1 - t2),
                       doctest::Contains("no polynomial quotient"), Error);
}

TEST_CASE("exact division of Laurent monath shifts") {
  // quotients may involve negative exponents
  VarShape tt{0, 1, false};
  LaurentPoly t = LaurentPoly::t_var(tt, 1);
  LaurentPoly tinv = LaurentPoly::monomial(tt, ExpVec{-1}, 1);
  CHECK(exact_divide(one(tt), t) == tinv);
  CHECK(exact_divide(t + t * t, t) == one(tt) + t);
}

TEST_CASE("exact_divide(mul(f,g), g) = f randomized") {
  std::mt19937_64 rng(23);
  VarShape sh{1, 1, false};
  int done = 0;
  while (done < 30) {
    LaurentPoly f = random_poly(rng, sh, 4, 2);
    LaurentPoly g = random_poly(rng, sh, 4, 2);
    if (g.is_zero()) continue;
    CHECK(exact_divide(f * g, g) == f);
    ++done;
  }
}

TEST_CASE("substitute_affine") {
  LaurentPoly u1t1 = U1() * T1();
  LaurentPoly f = substitute_affine(one() - u1t1);
  CHECK(f == U1() + T1() - u1t1);
  CHECK(substitute_affine(one()) == one());

  VarShape sh{2, 2, false};
  ExpVec e{1, 1, 1, 1};
  LaurentPoly m = LaurentPoly::monomial(sh, e, 1);
  LaurentPoly expect = LaurentPoly::constant(sh, 1);
  for (int k = 0; k < 4; ++k) {
    ExpVec v(4, 0);
    v[k] = 1;
    LaurentPoly f2 = LaurentPoly::constant(sh, 1);
    f2.add_term(v, -1);
    expect = expect * f2;
  }
  CHECK(substitute_affine(m) == expect);

  LaurentPoly neg = LaurentPoly::monomial(UT, ExpVec{-1, 0}, 1);
  CHECK_THROWS_AS((void)substitute_affine(neg), Error);
}

TEST_CASE("substitute_affine is an involution on square-free polynomials") {
  std::mt19937_64 rng(31);
  VarShape sh{2, 1, false};
  for (int rep = 0; rep < 20; ++rep) {
    LaurentPoly f = random_poly(rng, sh, 5, 1);  // exponents in {0,1}
    CHECK(substitute_affine(substitute_affine(f)) == f);
  }
}

TEST_CASE("truncated geometric product") {
  LaurentPoly f = truncated_geometric_product(1, ExpVec{1});
  CHECK(f == one() + U1() * T1());

  LaurentPoly g = truncated_geometric_product(2, ExpVec{1});
  VarShape sh = g.shape();
  CHECK(g.coeff(ExpVec{1, 0, 1}) == 1);  // u1 t1
  CHECK(g.coeff(ExpVec{0, 1, 1}) == 1);  // u2 t1
  CHECK(g.coeff(ExpVec{0, 0, 0}) == 1);

  CHECK(truncated_geometric_product(2, ExpVec{0, 0}) ==
        LaurentPoly::constant(VarShape{2, 2, false}, 1));
  CHECK_THROWS_AS((void)truncated_geometric_product(1, ExpVec{-1}), Error);
}

TEST_CASE("rendering") {
  VarShape sh{2, 4, false};
  ExpVec e{2, 2, 1, 1, 1, 1};
  LaurentPoly f = LaurentPoly::monomial(sh, e, -1);
  CHECK(f.to_string() == "-1 * u1^2 u2^2 t1 t2 t3 t4");
  CHECK(LaurentPoly(sh).to_string() == "0");
}
