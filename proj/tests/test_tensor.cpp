#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbitk/catalog.hpp"
#include "orbitk/kclass.hpp"
#include "orbitk/tensor.hpp"

using namespace orbitk;

namespace {

const ExpVec none{};

RationalMatrix uniform2n(int n) {
  RationalMatrix v(2, n);
  for (int j = 0; j < n; ++j) {
    v.at(0, j) = 1;
    v.at(1, j) = j;
  }
  return v;
}

std::map<Partition, Int> as_map(const SchurExpansion& e) {
  std::map<Partition, Int> out;
  for (const auto& [key, c] : e.terms()) out[key.first] = c;
  return out;
}

}  // namespace

TEST_CASE("char_uniform_rank2") {
  SchurExpansion c4 = char_uniform_rank2(4);
  CHECK(c4.coeff(Partition{4}, none) == 1);
  CHECK(c4.coeff(Partition{3, 1}, none) == 3);
  CHECK(c4.coeff(Partition{2, 2}, none) == 1);
  CHECK(c4.terms().size() == 3);

  SchurExpansion c2 = char_uniform_rank2(2);
  CHECK(c2.coeff(Partition{2}, none) == 1);
  CHECK(c2.coeff(Partition{1, 1}, none) == 1);

  // dimension (n^3 + 5n + 6)/6
  for (int n = 2; n <= 6; ++n) {
    Int dim = 0;
    for (const auto& [key, c] : char_uniform_rank2(n).terms())
      dim += c * Int(key.first.part(0) - key.first.part(1) + 1);
    CHECK(dim == (n * n * n + 5 * n + 6) / 6);
  }
}

TEST_CASE("char_rank2") {
  CHECK(char_rank2(Partition{1, 1, 1, 1}) == char_uniform_rank2(4));

  SchurExpansion c22 = char_rank2(Partition{2, 2});
  CHECK(c22.coeff(Partition{4}, none) == 1);
  CHECK(c22.coeff(Partition{3, 1}, none) == 1);
  CHECK(c22.coeff(Partition{2, 2}, none) == 1);
  CHECK(c22.terms().size() == 3);

  SchurExpansion c31 = char_rank2(Partition{3, 1});
  CHECK(c31.coeff(Partition{4}, none) == 1);
  CHECK(c31.coeff(Partition{3, 1}, none) == 1);
  CHECK(c31.terms().size() == 2);

  CHECK_THROWS_AS((void)char_rank2(Partition{4}), Error);
}

TEST_CASE("hook multiplicities via nbc") {
  Matroid u24 = Matroid::uniform(2, 4);
  CHECK(hook_multiplicity_nbc(u24, 1) == 1);
  CHECK(hook_multiplicity_nbc(u24, 2) == 3);
  CHECK(hook_multiplicity_nbc(u24, 3) == 0);
  CHECK(hook_multiplicity_nbc(Matroid::uniform(1, 3), 1) == 1);
  Matroid withloop = Matroid::from_bases(2, {0b01});
  CHECK_THROWS_AS((void)hook_multiplicity_nbc(withloop, 1), Error);
}

TEST_CASE("hook generating identity") {
  auto [lhs, rhs] = hook_generating_identity(Matroid::uniform(2, 4));
  CHECK(lhs == rhs);
  // both sides are 3q^2 + 4q + 1
  VarShape sh{0, 0, true};
  LaurentPoly expect(sh);
  expect.add_term(ExpVec{2}, 3);
  expect.add_term(ExpVec{1}, 4);
  expect.add_term(ExpVec{0}, 1);
  CHECK(lhs == expect);

  auto [l1, r1] = hook_generating_identity(Matroid::uniform(1, 1));
  CHECK(l1 == r1);
  LaurentPoly cexpect(sh);
  cexpect.add_term(ExpVec{0}, 1);
  cexpect.add_term(ExpVec{1}, 1);
  CHECK(l1 == cexpect);

  auto [l13, r13] = hook_generating_identity(Matroid::uniform(1, 3));
  CHECK(l13 == r13);
  CHECK(l13 == cexpect);  // q + 1 as well
}

TEST_CASE("hook identity across the catalog") {
  for (const Matroid& m : catalog::matroid_catalog(5, 5)) {
    if (!m.loopless()) continue;
    auto [lhs, rhs] = hook_generating_identity(m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("support test") {
  Matroid u24 = Matroid::uniform(2, 4);
  CHECK(support_test(u24, Partition{3, 1}));
  CHECK(support_test(u24, Partition{2, 2}));
  CHECK(support_test(u24, Partition{4}));
  CHECK_FALSE(support_test(u24, Partition{2, 1, 1}));
  CHECK_THROWS_AS((void)support_test(u24, Partition{2, 1}), Error);
}

TEST_CASE("mn_character") {
  // chi_(n) is trivial
  for (const Partition& cls : partitions_of(4))
    CHECK(mn_character(Partition{4}, cls) == 1);
  // chi_(1^n) is the sign character
  for (const Partition& cls : partitions_of(4)) {
    int even_cycles = 0;
    for (int i = 0; i < cls.length(); ++i)
      if (cls.part(i) % 2 == 0) ++even_cycles;
    CHECK(mn_character(Partition{1, 1, 1, 1}, cls) ==
          ((even_cycles % 2 == 0) ? 1 : -1));
  }
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(specht_dimension(Partition{2, 2}) == 2);
  CHECK(specht_dimension(Partition{3, 1}) == 3);
  CHECK(specht_dimension(Partition{2, 1, 1}) == 3);
}

TEST_CASE("character orthogonality at small n") {
  for (int n = 2; n <= 5; ++n) {
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    auto parts = partitions_of(n);
    for (const Partition& lam : parts)
      for (const Partition& mu : parts) {
        Int sum = 0;
        for (const Partition& cls : parts)
          sum += conjugacy_class_size(cls) * mn_character(lam, cls) *
                 mn_character(mu, cls);
        CHECK(sum == (lam == mu ? fact : Int(0)));
      }
  }
}

TEST_CASE("schur_weyl_module dimensions") {
  SnModule u24 = schur_weyl_module(uniform2n(4));
  CHECK(u24.dimension() == 15);

  RationalMatrix all_equal(2, 3);
  for (int j = 0; j < 3; ++j) all_equal.at(0, j) = 1;
  CHECK(schur_weyl_module(all_equal).dimension() == 1);

  RationalMatrix v22 = catalog::rank2_realization(
      Rank2Config::from_mu(Partition{2, 2}), {Rat(0), Rat(1)});
  CHECK(schur_weyl_module(v22).dimension() == 6);  // 1 + 3 + 2
}

TEST_CASE("sn_multiplicities against the characters") {
  SnModule u24 = schur_weyl_module(uniform2n(4));
  auto mult = sn_multiplicities(u24);
  CHECK(mult.at(Partition{4}) == 1);
  CHECK(mult.at(Partition{3, 1}) == 3);
  CHECK(mult.at(Partition{2, 2}) == 1);
  CHECK(mult.size() == 3);

  RationalMatrix all_equal(2, 3);
  for (int j = 0; j < 3; ++j) all_equal.at(0, j) = 1;
  auto triv = sn_multiplicities(schur_weyl_module(all_equal));
  CHECK(triv.size() == 1);
  CHECK(triv.at(Partition{3}) == 1);

  RationalMatrix v22 = catalog::rank2_realization(
      Rank2Config::from_mu(Partition{2, 2}), {Rat(0), Rat(1)});
  auto m22 = sn_multiplicities(schur_weyl_module(v22));
  CHECK(m22 == as_map(char_rank2(Partition{2, 2})));
}

TEST_CASE("oracle equals formulas and the K-route on the rank-2 catalog") {
  for (const Rank2Config& cfg : catalog::rank2_configs(5)) {
    RationalMatrix v = cfg.realization();
    auto oracle = sn_multiplicities(schur_weyl_module(v));
    CHECK(oracle == as_map(char_rank2(cfg.mu())));
    SchurExpansion viaK = hilbert_coefficient(k_rank2(cfg), ExpVec(cfg.n(), 1));
    CHECK(oracle == as_map(viaK));
    // dimension consistency
    Int total = 0;
    for (const auto& [lam, m] : oracle) total += m * specht_dimension(lam);
    CHECK(total == schur_weyl_module(v).dimension());
    // only partitions with at most r rows appear
    for (const auto& [lam, m] : oracle) CHECK(lam.length() <= 2);
  }
}

TEST_CASE("multiplicities are invariant under the group action") {
  std::mt19937_64 rng(91);
  std::uniform_int_distribution<int> entry(-3, 3), tnum(1, 5);
  RationalMatrix v = uniform2n(4);
  auto base = sn_multiplicities(schur_weyl_module(v));
  for (int rep = 0; rep < 5; ++rep) {
    RationalMatrix g(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g.at(i, j) = entry(rng);
    } while (g.rank() != 2);
    std::vector<Rat> t(4);
    for (int j = 0; j < 4; ++j) t[j] = Rat(tnum(rng), tnum(rng));
    CHECK(sn_multiplicities(schur_weyl_module(g.mul(v).scale_cols(t))) == base);
  }
  // column permutation
  RationalMatrix w(2, 4);
  for (int j = 0; j < 4; ++j) {
    w.at(0, j) = v.at(0, 3 - j);
    w.at(1, j) = v.at(1, 3 - j);
  }
  CHECK(sn_multiplicities(schur_weyl_module(w)) == base);
}

TEST_CASE("rank-3 hooks and a rank-3 module") {
  // the braid arrangement pattern: columns e1, e2, e3, e1+e2
  RationalMatrix v = RationalMatrix::from_int_rows(
      {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}});
  Matroid m = Matroid::from_matrix(v);
  auto mult = sn_multiplicities(schur_weyl_module(v));
  for (int k = 1; k <= 3; ++k) {
    Partition hook = hook_shape(4, k);
    Int expected = hook_multiplicity_nbc(m, k);
    Int got = mult.count(hook) ? mult.at(hook) : Int(0);
    CHECK(got == expected);
  }
}

TEST_CASE("hooks in modules match nbc across the catalog") {
  std::mt19937_64 rng(101);
  int tested = 0;
  for (const Matroid& m : catalog::matroid_catalog(5, 4)) {
    if (!m.loopless() || m.rank() > 3 || m.rank() < 1) continue;
    if (m.n() > 4) continue;
    // realize by a random matrix with the same matroid, drawn from the
    // catalog construction itself
    // (skip when no small realization is found quickly)
    RationalMatrix v(m.rank(), m.n());
    bool found = false;
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 400 && !found; ++trial) {
      for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.n(); ++j) v.at(i, j) = entry(rng);
      found = (Matroid::from_matrix(v) == m);
    }
    if (!found) continue;
    auto mult = sn_multiplicities(schur_weyl_module(v));
    for (int k = 1; k <= m.rank(); ++k) {
      Partition hook = hook_shape(m.n(), k);
      Int expected = hook_multiplicity_nbc(m, k);
      Int got = mult.count(hook) ? mult.at(hook) : Int(0);
      CHECK(got == expected);
    }
    ++tested;
  }
  CHECK(tested >= 10);
}
