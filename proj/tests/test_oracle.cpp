#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "orbitk/groebner.hpp"

using namespace orbitk;

namespace {

RationalMatrix u24_matrix() {
  return RationalMatrix::from_int_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});
}

RationalMatrix uniform2n(int n) {
  RationalMatrix v(2, n);
  for (int j = 0; j < n; ++j) {
    v.at(0, j) = 1;
    v.at(1, j) = j;
  }
  return v;
}

Rat eval_gen(const GradedPoly& g, const RationalMatrix& x) {
  Rat total(0);
  int n = g.n;
  for (const auto& [mono, c] : g.terms) {
    Rat m(c);
    for (int i = 0; i < g.r; ++i)
      for (int j = 0; j < n; ++j)
        for (int rep = 0; rep < mono[i * n + j]; ++rep) m *= x.at(i, j);
    total += m;
  }
  return total;
}

RationalMatrix random_translate(std::mt19937_64& rng, const RationalMatrix& v) {
  std::uniform_int_distribution<int> entry(-3, 3), tnum(1, 5);
  int r = v.rows(), n = v.cols();
  RationalMatrix g(r, r);
  do {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) g.at(i, j) = entry(rng);
  } while (g.rank() != r);
  std::vector<Rat> t(n);
  for (int j = 0; j < n; ++j) t[j] = Rat(tnum(rng), tnum(rng));
  return g.mul(v).scale_cols(t);
}

}  // namespace

TEST_CASE("gale dual") {
  RationalMatrix v = RationalMatrix::from_int_rows({{1, 0, 1}, {0, 1, 1}});
  RationalMatrix k = gale_dual(v);
  CHECK(k.rows() == 1);
  CHECK(k.cols() == 3);
  // v . k^t = 0
  RationalMatrix prod = v.mul(k.transpose());
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
  // the kernel is spanned by (1, 1, -1)
  Rat ratio = k.at(0, 0);
  CHECK(k.at(0, 1) == ratio);
  CHECK(k.at(0, 2) == -ratio);

  CHECK(gale_dual(RationalMatrix::identity(2)).rows() == 0);

  RationalMatrix z(1, 2);
  RationalMatrix kz = gale_dual(z);
  CHECK(kz.rows() == 2);
  CHECK(kz.rank() == 2);
}

TEST_CASE("iprime generators") {
  IdealPresentation ideal = iprime_generators(u24_matrix());
  CHECK(ideal.gens.size() == 1);
  int deg = 0;
  for (const auto& [m, c] : ideal.gens[0].terms)
    deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0));
  CHECK(deg == 4);

  CHECK(iprime_generators(RationalMatrix::identity(2)).gens.empty());
}

TEST_CASE("idoubleprime generators") {
  IdealPresentation ideal = idoubleprime_generators(u24_matrix());
  CHECK(ideal.gens.size() == 1);
  auto [a, b] = xmono_weight(2, 4, ideal.gens[0].terms.begin()->first);
  CHECK(a == ExpVec{2, 2});
  CHECK(b == ExpVec{1, 1, 1, 1});

  // every generator vanishes on random orbit translates
  std::mt19937_64 rng(21);
  for (const auto& v : {u24_matrix(), uniform2n(5)}) {
    IdealPresentation id2 = idoubleprime_generators(v);
    IdealPresentation id1 = iprime_generators(v);
    for (int rep = 0; rep < 50; ++rep) {
      RationalMatrix w = random_translate(rng, v);
      for (const GradedPoly& g : id2.gens) CHECK(eval_gen(g, w) == 0);
      if (rep < 20)
        for (const GradedPoly& g : id1.gens) CHECK(eval_gen(g, w) == 0);
    }
  }
}

TEST_CASE("buchberger basics") {
  // a principal ideal is its own reduced basis
  IdealPresentation det2;
  det2.r = 2;
  det2.n = 2;
  {
    std::map<XMono, Rat> terms;
    XMono m1{1, 0, 0, 1}, m2{0, 1, 1, 0};
    terms.emplace(m1, Rat(1));
    terms.emplace(m2, Rat(-1));
    det2.gens.push_back(make_graded_poly(2, 2, std::move(terms)));
  }
  auto gb = buchberger(det2);
  CHECK(gb.size() == 1);
  CHECK(gb[0].terms.size() == 2);

  auto gb23 = buchberger(generic_minors_ideal(2, 3));
  CHECK(gb23.size() == 3);
}

TEST_CASE("K-polynomial of the 2x2 determinant") {
  IdealPresentation det2;
  det2.r = 2;
  det2.n = 2;
  std::map<XMono, Rat> terms;
  terms.emplace(XMono{1, 0, 0, 1}, Rat(1));
  terms.emplace(XMono{0, 1, 1, 0}, Rat(-1));
  det2.gens.push_back(make_graded_poly(2, 2, std::move(terms)));
  SchurExpansion k = k_polynomial_of_quotient(det2);
  SchurExpansion expect(2, 2);
  expect.add_term(Partition{}, ExpVec{0, 0}, 1);
  expect.add_term(Partition{1, 1}, ExpVec{1, 1}, -1);
  CHECK(k == expect);
}

TEST_CASE("K-polynomial of the 2x3 generic minors (Hilbert-Burch)") {
  SchurExpansion k = k_polynomial_of_quotient(generic_minors_ideal(2, 3));
  SchurExpansion expect(2, 3);
  expect.add_term(Partition{}, ExpVec{0, 0, 0}, 1);
  expect.add_term(Partition{1, 1}, ExpVec{1, 1, 0}, -1);
  expect.add_term(Partition{1, 1}, ExpVec{1, 0, 1}, -1);
  expect.add_term(Partition{1, 1}, ExpVec{0, 1, 1}, -1);
  expect.add_term(Partition{2, 1}, ExpVec{1, 1, 1}, 1);
  CHECK(k == expect);
}

TEST_CASE("K-polynomial of I''_v for uniform 2x4") {
  SchurExpansion k = k_polynomial_of_quotient(idoubleprime_generators(u24_matrix()));
  SchurExpansion expect(2, 4);
  expect.add_term(Partition{}, ExpVec{0, 0, 0, 0}, 1);
  expect.add_term(Partition{2, 2}, ExpVec{1, 1, 1, 1}, -1);
  CHECK(k == expect);
}

TEST_CASE("K-polynomial is invariant under column relabeling") {
  RationalMatrix v = u24_matrix();
  // permute columns (reverse) and relabel back
  RationalMatrix w(2, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) w.at(i, j) = v.at(i, 3 - j);
  SchurExpansion k1 = k_polynomial_of_quotient(idoubleprime_generators(v));
  SchurExpansion k2 = k_polynomial_of_quotient(idoubleprime_generators(w));
  CHECK(k1 == k2.relabel_t({4, 3, 2, 1}));
}

TEST_CASE("dimension of quotients") {
  CHECK(dimension_of_quotient(idoubleprime_generators(u24_matrix())) == 7);

  IdealPresentation zero;
  zero.r = 2;
  zero.n = 2;
  CHECK(dimension_of_quotient(zero) == 4);

  IdealPresentation allvars;
  allvars.r = 1;
  allvars.n = 3;
  for (int j = 0; j < 3; ++j) {
    std::map<XMono, Rat> terms;
    XMono m(3, 0);
    m[j] = 1;
    terms.emplace(m, Rat(1));
    allvars.gens.push_back(make_graded_poly(1, 3, std::move(terms)));
  }
  CHECK(dimension_of_quotient(allvars) == 0);
}

TEST_CASE("I''_v reduces to zero against a Groebner basis of I'_v") {
  for (int n = 4; n <= 5; ++n) {
    RationalMatrix v = uniform2n(n);
    auto gb = buchberger(iprime_generators(v));
    for (const GradedPoly& g : idoubleprime_generators(v).gens)
      CHECK(normal_form(g, gb).is_zero());
  }
}

TEST_CASE("membership") {
  RationalMatrix v = RationalMatrix::from_int_rows(
      {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}});
  RationalMatrix w = RationalMatrix::from_int_rows(
      {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 0, 0, 0}});
  CHECK(membership_test(w, v));

  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 10; ++rep)
    CHECK(membership_test(random_translate(rng, v), v));

  RationalMatrix v1 = uniform2n(4);
  RationalMatrix v2 = v1;
  v2.at(1, 3) = 7;  // different cross-ratio
  CHECK_FALSE(membership_test(v2, v1));
  CHECK_FALSE(membership_test(v1, v2));

  // membership is invariant under the action on both arguments
  for (int rep = 0; rep < 5; ++rep) {
    RationalMatrix w2 = random_translate(rng, v2);
    CHECK_FALSE(membership_test(w2, v1));
  }
}

TEST_CASE("quotient data for the uniform 2x5 ideal") {
  QuotientData qd = quotient_data(idoubleprime_generators(uniform2n(5)));
  CHECK(qd.dimension == 8);
  CHECK(qd.degree == 10);
  // K-polynomial agrees with the closed form: checked in test_kclass
  CHECK(qd.k_polynomial.coeff(Partition{2, 2}, ExpVec{1, 1, 1, 1, 0}) == -1);
  CHECK(qd.k_polynomial.coeff(Partition{3, 2}, ExpVec{1, 1, 1, 1, 1}) == 2);
}

TEST_CASE("resource cap") {
  GroebnerOptions opts;
  opts.step_cap = 1;
  CHECK_THROWS_WITH_AS((void)buchberger(generic_minors_ideal(2, 3), opts),
                       doctest::Contains("cap"), Error);
}
