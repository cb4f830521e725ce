#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbitk/catalog.hpp"
#include "orbitk/cohomology.hpp"
#include "orbitk/kclass.hpp"

using namespace orbitk;

namespace {

// truncated Laurent series in one variable eps over Q, for the small-eps
// expansion of the K-theoretic localization
struct EpsSeries {
  int lead = 0;                // exponent of the first stored coefficient
  std::vector<Rat> c;          // c[i] is the coefficient of eps^{lead+i}
  static int order;            // stored length

  static EpsSeries constant(const Rat& x) {
    EpsSeries s;
    s.lead = 0;
    s.c.assign(order, Rat(0));
    s.c[0] = x;
    return s;
  }
  // eps^k * (a + b eps)
  static EpsSeries linear(int k, const Rat& a, const Rat& b) {
    EpsSeries s;
    s.lead = k;
    s.c.assign(order, Rat(0));
    s.c[0] = a;
    if (order > 1) s.c[1] = b;
    return s;
  }
  EpsSeries mul(const EpsSeries& o) const {
    EpsSeries s;
    s.lead = lead + o.lead;
    s.c.assign(order, Rat(0));
    for (int i = 0; i < order; ++i)
      for (int j = 0; i + j < order; ++j) s.c[i + j] += c[i] * o.c[j];
    return s;
  }
  EpsSeries inverse() const {
    // first nonzero coefficient must lead
    int shift = 0;
    while (shift < order && c[shift] == 0) ++shift;
    if (shift == order) throw Error("empty", "inverting zero series");
    EpsSeries s;
    s.lead = -(lead + shift);
    s.c.assign(order, Rat(0));
    s.c[0] = 1 / c[shift];
    for (int i = 1; i < order; ++i) {
      Rat acc(0);
      for (int j = 1; j <= i && shift + j < order; ++j)
        acc += c[shift + j] * s.c[i - j];
      s.c[i] = -acc / c[shift];
    }
    return s;
  }
  EpsSeries add(const EpsSeries& o) const {
    EpsSeries s;
    s.lead = std::min(lead, o.lead);
    s.c.assign(order, Rat(0));
    for (int i = 0; i < order; ++i) {
      int k = s.lead + i;
      if (k - lead >= 0 && k - lead < order) s.c[i] += c[k - lead];
      if (k - o.lead >= 0 && k - o.lead < order) s.c[i] += o.c[k - o.lead];
    }
    return s;
  }
  Rat coeff(int k) const {
    int i = k - lead;
    return (i >= 0 && i < order) ? c[i] : Rat(0);
  }
};
int EpsSeries::order = 8;

}  // namespace

TEST_CASE("multidegree examples") {
  SchurExpansion k24 = k_uniform_rank2(4);
  SchurExpansion md = multidegree(k24, 1);
  CHECK(md.coeff(Partition{1}, ExpVec{0, 0, 0, 0}) == 2);
  for (int j = 0; j < 4; ++j) {
    ExpVec t(4, 0);
    t[j] = 1;
    CHECK(md.coeff(Partition{}, t) == 1);
  }
  CHECK(md.terms().size() == 5);

  SchurExpansion k211 = k_rank2(Rank2Config::from_mu(Partition{2, 1, 1}));
  SchurExpansion md2 = multidegree(k211, 1);
  CHECK(md2.coeff(Partition{1}, ExpVec{0, 0, 0, 0}) == 1);
  CHECK(md2.coeff(Partition{}, ExpVec{1, 0, 0, 0}) == 1);
  CHECK(md2.coeff(Partition{}, ExpVec{0, 1, 0, 0}) == 1);
  CHECK(md2.terms().size() == 3);

  CHECK(multidegree(SchurExpansion::one(2, 2), 0) == SchurExpansion::one(2, 2));
  CHECK_THROWS_WITH_AS((void)multidegree(k24, 2), doctest::Contains("below"), Error);
}

TEST_CASE("multidegree sits at the orbit codimension on the catalog") {
  for (const Rank2Config& cfg : catalog::rank2_configs(5)) {
    int codim = codim_matrix_orbit(cfg.matroid(), 2);
    CHECK_NOTHROW((void)multidegree(k_rank2(cfg), codim));
  }
}

TEST_CASE("codim examples") {
  CHECK(codim_matrix_orbit(Matroid::uniform(2, 4), 2) == 1);
  CHECK(codim_matrix_orbit(Matroid::uniform(2, 3), 2) == 0);
  CHECK(codim_matrix_orbit(catalog::octahedron_m12(), 2) == 2);
  CHECK_THROWS_AS((void)codim_matrix_orbit(Matroid::uniform(1, 3), 2), Error);
}

TEST_CASE("uniform class examples") {
  UniformClass c23 = uniform_class_grassmannian(2, 3);
  CHECK(c23.in_ut == SchurExpansion::one(2, 3));

  UniformClass c24 = uniform_class_grassmannian(2, 4);
  SchurExpansion expect(2, 4);
  expect.add_term(Partition{1}, ExpVec{0, 0, 0, 0}, 2);
  for (int j = 0; j < 4; ++j) {
    ExpVec t(4, 0);
    t[j] = 1;
    expect.add_term(Partition{}, t, 1);
  }
  CHECK(c24.in_ut == expect);
  CHECK(c24.in_ut == multidegree(k_uniform_rank2(4), 1));
}

TEST_CASE("uniform class lambda_1 bound") {
  for (auto [r, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}}) {
    UniformClass uc = uniform_class_grassmannian(r, n);
    for (const auto& [key, c] : uc.in_ut.terms()) CHECK(key.first.part(0) <= n - r);
  }
}

TEST_CASE("localize_uniform_closed") {
  std::vector<Rat> t = {1, 2, 3, 4};
  CHECK(localize_uniform_closed({1, 2}, 2, 4, t) == 4);
  // symbolic value is t3 + t4 - t1 - t2
  std::vector<Rat> t2 = {Rat(1, 3), 5, Rat(7, 2), 11};
  CHECK(localize_uniform_closed({1, 2}, 2, 4, t2) == t2[2] + t2[3] - t2[0] - t2[1]);

  std::vector<Rat> t3 = {2, 5, 9};
  CHECK(localize_uniform_closed({1, 2}, 2, 3, t3) == 1);
  CHECK_THROWS_AS((void)localize_uniform_closed({1, 2}, 2, 3, {Rat(1), Rat(1), Rat(2)}),
                  Error);
}

TEST_CASE("permutation localization agrees with the closed form") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> coord(1, 10000);
  for (auto [r, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}}) {
    Matroid um = Matroid::uniform(r, n);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Rat> t(n);
      bool distinct = true;
      for (int j = 0; j < n; ++j) t[j] = coord(rng);
      for (int a = 0; a < n && distinct; ++a)
        for (int b = a + 1; b < n; ++b)
          if (t[a] == t[b]) distinct = false;
      if (!distinct) continue;
      for (const auto& B : r_subsets(r, n)) {
        CHECK(localize_uniform_closed(B, r, n, t) ==
              localize_orbit_via_permutations(um, B, t));
      }
    }
  }
}

TEST_CASE("permutation localization specials") {
  std::vector<Rat> t = {1, 2, 3, 4};
  Matroid m1 = catalog::octahedron_m1();
  CHECK(localize_orbit_via_permutations(m1, {1, 2}, t) == 0);  // not a basis
  Matroid u22 = Matroid::uniform(2, 2);
  CHECK(localize_orbit_via_permutations(u22, {1, 2}, {Rat(3), Rat(7)}) == 1);
}

TEST_CASE("K localization contracts to the cohomology localization") {
  // t_i = 1 - eps s_i: the lowest eps-order coefficient is the cohomological
  // localization, at order codim
  std::vector<std::pair<int, int>> cases = {{2, 4}, {2, 5}};
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> coord(1, 50);
  for (auto [r, n] : cases) {
    Matroid um = Matroid::uniform(r, n);
    int codim = (n - r - 1) * (r - 1);
    std::vector<Rat> s(n);
    bool distinct = false;
    while (!distinct) {
      distinct = true;
      for (int j = 0; j < n; ++j) s[j] = coord(rng);
      for (int a = 0; a < n && distinct; ++a)
        for (int b = a + 1; b < n; ++b)
          if (s[a] == s[b]) distinct = false;
    }
    for (const auto& B : r_subsets(r, n)) {
      Rat expect = localize_orbit_via_permutations(um, B, s);

      // numeric limit at eps = 10^{-6}
      Rat eps(1, 1000000);
      std::vector<Rat> t(n);
      for (int j = 0; j < n; ++j) t[j] = 1 - eps * s[j];
      Rat kval = klocalize_orbit(um, B, t);
      for (int d = 0; d < codim; ++d) kval /= eps;
      Rat err = kval - expect;
      if (err < 0) err = -err;
      CHECK(err < Rat(1, 1000));

      // exact small-eps series of the same Brion sum
      std::vector<bool> in_b(n + 1, false);
      for (int i : B) in_b[i] = true;
      EpsSeries total = EpsSeries::constant(Rat(0));
      std::vector<int> perm(n);
      for (int j = 0; j < n; ++j) perm[j] = j + 1;
      do {
        uint32_t cur = 0;
        bool isB = true;
        // greedy lex-first basis for the uniform matroid: first r entries
        for (int k = 0; k < r; ++k) cur |= (1u << (perm[k] - 1));
        for (int i : B) isB = isB && (cur & (1u << (i - 1)));
        if (!isB) continue;
        EpsSeries term = EpsSeries::constant(Rat(1));
        for (int k = 0; k + 1 < n; ++k) {
          int i = perm[k], j = perm[k + 1];
          // 1 - t_j/t_i = eps (s_j - s_i) / (1 - eps s_i)
          EpsSeries numer = EpsSeries::linear(1, s[j - 1] - s[i - 1], Rat(0));
          EpsSeries denom = EpsSeries::linear(0, Rat(1), -s[i - 1]);
          term = term.mul(numer.mul(denom.inverse()).inverse());
        }
        total = total.add(term);
      } while (std::next_permutation(perm.begin(), perm.end()));
      EpsSeries prefactor = EpsSeries::constant(Rat(1));
      for (int i : B)
        for (int j = 1; j <= n; ++j) {
          if (in_b[j]) continue;
          EpsSeries numer = EpsSeries::linear(1, s[j - 1] - s[i - 1], Rat(0));
          EpsSeries denom = EpsSeries::linear(0, Rat(1), -s[i - 1]);
          prefactor = prefactor.mul(numer.mul(denom.inverse()));
        }
      EpsSeries full = prefactor.mul(total);
      for (int d = full.lead; d < codim; ++d) CHECK(full.coeff(d) == 0);
      CHECK(full.coeff(codim) == expect);
    }
  }
}

TEST_CASE("gkm") {
  // uniform (2,4): interpolate from the closed form and check edges
  Localization loc = interpolate_localization(
      2, 4, 1,
      [](const std::vector<int>& B, const std::vector<Rat>& t) {
        return localize_uniform_closed(B, 2, 4, t);
      },
      5);
  CHECK(gkm_check(loc));
  // explicit entry: f_{12} = t3 + t4 - t1 - t2
  VarShape sh{0, 4, false};
  LaurentPoly expect(sh);
  expect.add_term(ExpVec{0, 0, 1, 0}, 1);
  expect.add_term(ExpVec{0, 0, 0, 1}, 1);
  expect.add_term(ExpVec{1, 0, 0, 0}, -1);
  expect.add_term(ExpVec{0, 1, 0, 0}, -1);
  CHECK(loc.entries().at({1, 2}) == expect);

  // constant localization trivially passes
  Localization cst(2, 4);
  for (const auto& B : r_subsets(2, 4))
    cst.entries().emplace(B, LaurentPoly::constant(sh, 1));
  CHECK(gkm_check(cst));

  // hand-corrupted table fails
  Localization bad = loc;
  bad.entries().at({1, 2}).add_term(ExpVec{1, 0, 0, 0}, 5);
  CHECK_FALSE(gkm_check(bad));
}

TEST_CASE("degree_uniform") {
  CHECK(degree_uniform(2, 4) == 4);
  CHECK(degree_uniform(2, 3) == 1);
  CHECK(degree_uniform(2, 5) == 10);
  CHECK(degree_uniform(3, 5) == 15);
}

TEST_CASE("rho_H pipeline on rank-2 classes") {
  for (const Rank2Config& cfg : catalog::rank2_configs(4)) {
    SchurExpansion k = k_rank2(cfg);
    int codim = codim_matrix_orbit(cfg.matroid(), 2);
    CHECK(multidegree(rho(k), codim + cfg.n() - 2) == rho_H(1, multidegree(k, codim)));
  }
}

TEST_CASE("uniform class localizes like its closed form") {
  std::mt19937_64 rng(81);
  std::uniform_int_distribution<int> coord(1, 10000);
  for (auto [r, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
    UniformClass uc = uniform_class_grassmannian(r, n);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Rat> t(n);
      bool distinct = true;
      for (int j = 0; j < n; ++j) t[j] = coord(rng);
      for (int a = 0; a < n && distinct; ++a)
        for (int b = a + 1; b < n; ++b)
          if (t[a] == t[b]) distinct = false;
      if (!distinct) continue;
      for (const auto& B : r_subsets(r, n))
        CHECK(localize_ut_class(uc.in_ut, B, t) == localize_uniform_closed(B, r, n, t));
    }
  }
}
