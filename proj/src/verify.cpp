#include "orbitk/verify.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "orbitk/catalog.hpp"
#include "orbitk/cohomology.hpp"
#include "orbitk/groebner.hpp"
#include "orbitk/kclass.hpp"
#include "orbitk/tensor.hpp"

namespace orbitk {

namespace {

RationalMatrix uniform2n_matrix(int n) {
  // columns (1, j) for distinct slopes j = 0..n-1 -- uniform rank 2
  RationalMatrix v(2, n);
  for (int j = 0; j < n; ++j) {
    v.at(0, j) = 1;
    v.at(1, j) = j;
  }
  return v;
}

SchurExpansion expected_k_u24() {
  SchurExpansion e = SchurExpansion::one(2, 4);
  e.add_term(Partition{2, 2}, ExpVec{1, 1, 1, 1}, -1);
  return e;
}

std::vector<Rat> random_distinct_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coord(1, 10000);
  while (true) {
    std::vector<Rat> t(n);
    for (int j = 0; j < n; ++j) t[j] = coord(rng);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n; ++b)
        if (t[a] == t[b]) { ok = false; break; }
    if (ok) return t;
  }
}

RationalMatrix random_gl(std::mt19937_64& rng, int r) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    RationalMatrix g(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) g.at(i, j) = entry(rng);
    if (g.rank() == r) return g;
  }
}

std::vector<Rat> random_torus(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(1, 7);
  std::vector<Rat> t(n);
  for (int j = 0; j < n; ++j) t[j] = Rat(entry(rng), entry(rng));
  return t;
}

struct Runner {
  std::vector<CheckResult> results;
  void add(int index, const std::string& name, bool pass, const std::string& detail) {
    results.push_back({index, name, pass, detail});
  }
  template <typename F>
  void run(int index, const std::string& name, F&& f) {
    try {
      auto [pass, detail] = f();
      add(index, name, pass, detail);
    } catch (const Error& e) {
      add(index, name, false, std::string("error [") + e.code() + "]: " + e.what());
    } catch (const std::exception& e) {
      add(index, name, false, std::string("error: ") + e.what());
    }
  }
};

using Outcome = std::pair<bool, std::string>;

Outcome criterion1_triple_agreement() {
  SchurExpansion closed = k_uniform_rank2(4);
  SchurExpansion engine = k_rank2(Rank2Config::from_mu(Partition{1, 1, 1, 1}));
  RationalMatrix v = RationalMatrix::from_int_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});
  SchurExpansion oracle = k_polynomial_of_quotient(idoubleprime_generators(v));
  SchurExpansion expected = expected_k_u24();
  bool pass = closed == engine && engine == oracle && oracle == expected;
  return {pass, pass ? "closed form = Demazure engine = Groebner oracle = 1 - s(2,2) e4(t)"
                     : "mismatch between the three routes"};
}

// compare t-free SchurExpansions ignoring the stored t-arity
std::map<Partition, Int> schur_to_cmp(const SchurExpansion& e) {
  std::map<Partition, Int> out;
  for (const auto& [key, c] : e.terms()) out[key.first] = c;
  return out;
}

Outcome criterion2_tensor_characters(bool full) {
  std::ostringstream detail;
  std::vector<int> ns = full ? std::vector<int>{4, 5, 6} : std::vector<int>{4, 5};
  std::vector<long> dims = {15, 26, 42};
  for (int n : ns) {
    SchurExpansion k = k_uniform_rank2(n);
    SchurExpansion viaK = hilbert_coefficient(k, ExpVec(n, 1));
    SchurExpansion formula = char_uniform_rank2(n);
    if (!(schur_to_cmp(viaK) == schur_to_cmp(formula)))
      return {false, "hilbert coefficient disagrees with the closed character at n=" +
                         std::to_string(n)};
    Int dim = 0;
    for (const auto& [key, c] : formula.terms())
      dim += c * Int(key.first.part(0) - key.first.part(1) + 1);
    long expect = dims[n - 4];
    if (dim != expect)
      return {false, "dimension mismatch at n=" + std::to_string(n)};
    if (n <= 5) {
      SnModule mod = schur_weyl_module(uniform2n_matrix(n));
      std::map<Partition, Int> mult = sn_multiplicities(mod);
      for (const auto& [key, c] : formula.terms())
        if (mult[key.first] != c)
          return {false, "Schur-Weyl oracle disagrees at n=" + std::to_string(n)};
      Int total = 0;
      for (const auto& [lam, m] : mult) total += m;
      Int terms = 0;
      for (const auto& [key, c] : formula.terms()) terms += c;
      if (total != terms)
        return {false, "oracle has extra constituents at n=" + std::to_string(n)};
    }
    detail << "n=" << n << " dim=" << dim.get_str() << "; ";
  }
  return {true, detail.str()};
}

Outcome criterion3_matroid_invariance() {
  auto pairs = catalog::inequivalent_realization_pairs();
  if (pairs.size() < 10) return {false, "fewer than 10 pairs"};
  int checked = 0;
  for (const auto& [v1, v2] : pairs) {
    if (membership_test(v2, v1) || membership_test(v1, v2))
      return {false, "realization pair is projectively equivalent"};
    Rank2Config c1 = Rank2Config::from_matrix(v1);
    Rank2Config c2 = Rank2Config::from_matrix(v2);
    if (!(k_rank2(c1) == k_rank2(c2)))
      return {false, "k_rank2 differs between realizations"};
    if (v1.cols() <= 5) {
      auto m1 = sn_multiplicities(schur_weyl_module(v1));
      auto m2 = sn_multiplicities(schur_weyl_module(v2));
      if (m1 != m2) return {false, "Schur-Weyl multiplicities differ"};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " inequivalent pairs agree"};
}

Outcome criterion4_hook_web(bool full) {
  int max_n = full ? 6 : 5;
  for (const Rank2Config& cfg : catalog::rank2_configs(max_n)) {
    Matroid m = cfg.matroid();
    SchurExpansion k = k_rank2(cfg);
    LaurentPoly fd = hook_enumerator_fakedep(m);
    int n = cfg.n();
    for (uint32_t s = 0; s < (1u << n); ++s) {
      ExpVec beta(n, 0);
      uint32_t mask = 0;
      for (int j = 0; j < n; ++j)
        if (s & (1u << j)) { beta[j] = 1; mask |= (1u << j); }
      bool indep = m.independent(mask);
      std::map<int, Int> hooks;
      try {
        hooks = fakedep_hook_coefficients(fd, beta);
      } catch (const Error& e) {
        return {false, std::string("(q+1)-divisibility failed: ") + e.what()};
      }
      if (s != 0 && indep && !hooks.empty())
        return {false, "FakeDep nonzero on an independent set"};
      int size = std::popcount(s);
      for (int kk = 1; kk <= 2 && kk <= size; ++kk) {
        Int fromK = hook_coefficient(k, kk, beta);
        Int fromFD = hooks.count(kk) ? hooks[kk] : Int(0);
        if (s == 0) fromFD = 0;
        if (fromK != fromFD)
          return {false, "hook coefficient mismatch (k=" + std::to_string(kk) + ")"};
      }
    }
  }
  // nbc / Tutte identity over the general catalog
  int count = 0;
  for (const Matroid& m : catalog::matroid_catalog(7, max_n)) {
    if (!m.loopless()) continue;
    auto [lhs, rhs] = hook_generating_identity(m);
    if (!(lhs == rhs)) return {false, "nbc/Tutte identity failed"};
    ++count;
  }
  return {true, "rank-2 battery to n=" + std::to_string(max_n) + ", " +
                    std::to_string(count) + " loopless catalog matroids"};
}

Outcome criterion5_documented_deviations() {
  std::ostringstream detail;
  // (a) Dep-as-printed vs FakeDep on U_{1,2}
  Matroid u12 = Matroid::uniform(1, 2);
  LaurentPoly fd = hook_enumerator_fakedep(u12);
  LaurentPoly dep = dep_polynomial_as_printed(u12);
  {
    VarShape sh{0, 2, true};
    LaurentPoly fd_expect = LaurentPoly::constant(sh, 1);
    fd_expect.add_term(ExpVec{1, 1, 1}, -1);  // -q t1 t2
    fd_expect.add_term(ExpVec{1, 1, 2}, -1);  // -q^2 t1 t2
    LaurentPoly dep_expect = LaurentPoly::constant(sh, 1);
    dep_expect.add_term(ExpVec{1, 1, 0}, -1);
    dep_expect.add_term(ExpVec{1, 1, 1}, -1);
    if (!(fd == fd_expect)) return {false, "FakeDep(U_{1,2}) != 1 - q(q+1)t1t2"};
    if (!(dep == dep_expect)) return {false, "Dep(U_{1,2}) != 1 - (q+1)t1t2"};
    detail << "(a) exponent shift q^{rk-1} vs q^{rk} reproduced; ";
  }
  // (b) printed hook statement: sign on U_{1,2}, magnitude on U_{1,3}
  {
    auto hooks12 = fakedep_hook_coefficients(fd, ExpVec{1, 1});
    if (!(hooks12[2] == -1)) return {false, "FakeDep hook k=2 of U_{1,2} is not -1"};
    // printed: (-1)^k with k = rank+1 = 2 -> +1
    detail << "(b) sign: printed +1 vs normative -1 on U_{1,2}; ";
    Matroid u13 = Matroid::uniform(1, 3);
    auto hooks13 = fakedep_hook_coefficients(hook_enumerator_fakedep(u13), ExpVec{1, 1, 1});
    if (!(hooks13[3] == 2)) return {false, "FakeDep hook k=3 of U_{1,3} is not 2"};
    // cross-checks of the normative values against the Groebner oracle
    SchurExpansion k23 = k_polynomial_of_quotient(generic_minors_ideal(2, 3));
    if (!(k23.coeff(Partition{2, 1}, ExpVec{1, 1, 1}) == hooks13[2]))
      return {false, "oracle k=2 hook of the 3-parallel class mismatches FakeDep"};
    SchurExpansion k33 = k_polynomial_of_quotient(generic_minors_ideal(3, 3));
    if (!(k33.coeff(Partition{1, 1, 1}, ExpVec{1, 1, 1}) == hooks13[3]))
      return {false, "oracle k=3 hook of the 3-parallel class mismatches FakeDep"};
    detail << "magnitude: printed -1 vs normative 2 at k=3 (oracle-confirmed); ";
  }
  // (c) printed rank-2 closed form misses s_{(2,2)} e_4 on mu = (2,2)
  {
    Rank2Config cfg = Rank2Config::from_mu(Partition{2, 2});
    auto ds = compare_rank2_closed_form(cfg);
    bool found = false;
    for (const auto& d : ds)
      if (d.k == 2 && d.beta == ExpVec{1, 1, 1, 1} && d.printed == 0 && d.normative == 1)
        found = true;
    if (!found || ds.size() != 1)
      return {false, "closed-form discrepancy on mu=(2,2) not exactly the s(2,2)e4 term"};
    // delta-recursion value confirmed by the direct-sum route
    SchurExpansion viaSum = k_direct_sum(k_rank1_parallel(2), k_rank1_parallel(2));
    if (!(viaSum == k_rank2(cfg)))
      return {false, "direct-sum cross-check of mu=(2,2) failed"};
    detail << "(c) case-(4) gap at mu=(2,2) reproduced (direct-sum confirmed); ";
  }
  // (d) rho_k index shift at r = 1, 2
  {
    SchurExpansion one1 = SchurExpansion::one(1, 0);
    if (!rho_k(1, one1).is_zero()) return {false, "rho_1(1) at r=1 is nonzero"};
    SchurExpansion r2 = rho_k(2, one1);
    SchurExpansion expect2(2, 0);
    expect2.add_term(Partition{1, 1}, ExpVec{}, -1);
    if (!(r2 == expect2)) return {false, "rho_2(1) at r=1 is not -s(1,1)"};
    SchurExpansion one2 = SchurExpansion::one(2, 0);
    if (!rho_k(1, one2).is_zero() || !rho_k(2, one2).is_zero())
      return {false, "rho_k(1) at r=2, 0<k<=2 is nonzero"};
    SchurExpansion r3 = rho_k(3, one2);
    SchurExpansion expect3(3, 0);
    expect3.add_term(Partition{1, 1, 1}, ExpVec{}, 1);
    if (!(r3 == expect3)) return {false, "rho_3(1) at r=2 is not +s(1,1,1)"};
    detail << "(d) determinantal rho_k: rho_{r+1}(1) = (-1)^r s(1^{r+1}), "
              "not rho_r as printed";
  }
  return {true, detail.str()};
}

Outcome criterion6_valuativity() {
  SchurExpansion u24 = k_rank2(Rank2Config::from_mu(Partition{1, 1, 1, 1}));
  SchurExpansion m1 = k_rank2(Rank2Config::from_classes({1, 1, 2, 3}));
  SchurExpansion m2 = k_rank2(Rank2Config::from_classes({1, 2, 3, 3}));
  SchurExpansion m12 = k_rank2(Rank2Config::from_classes({1, 1, 2, 2}));
  bool kval = (u24 == m1 + m2 - m12);
  bool sub = subdivision_check(
      Matroid::uniform(2, 4),
      {{catalog::octahedron_m1(), 1}, {catalog::octahedron_m2(), 1},
       {catalog::octahedron_m12(), -1}});
  bool neg = !subdivision_check(Matroid::uniform(2, 4), {{catalog::octahedron_m1(), 1}});
  if (!kval) return {false, "K-classes are not valuative on the octahedron subdivision"};
  if (!sub) return {false, "indicator check of the subdivision failed"};
  if (!neg) return {false, "negative control subdivision accepted"};
  return {true, "k(U24) = k(M1) + k(M2) - k(M12); octahedron subdivision confirmed"};
}

Outcome criterion7_stabilization() {
  SchurExpansion three_parallel = k_rank1_parallel(3);
  SchurExpansion raised = rho(three_parallel);
  SchurExpansion oracle = k_polynomial_of_quotient(generic_minors_ideal(3, 3));
  if (!(raised == oracle)) return {false, "rho of the 3-parallel class != oracle K"};
  if (!(oracle.coeff(Partition{1, 1, 1}, ExpVec{1, 1, 1}) == 2))
    return {false, "s(1,1,1) t1t2t3 coefficient is not 2"};
  SchurExpansion det = rho(SchurExpansion::one(1, 2));
  SchurExpansion expect(2, 2);
  expect.add_term(Partition{}, ExpVec{0, 0}, 1);
  expect.add_term(Partition{1, 1}, ExpVec{1, 1}, -1);
  if (!(det == expect)) return {false, "rho(1) at r=1,n=2 != 1 - s(1,1)t1t2"};
  // the 2x3 source class agrees with its own oracle too
  SchurExpansion oracle23 = k_polynomial_of_quotient(generic_minors_ideal(2, 3));
  if (!(three_parallel == oracle23)) return {false, "3-parallel class != oracle K (2x3)"};
  return {true, "rho matches the Groebner oracle, coefficient 2 on s(1,1,1)t1t2t3"};
}

Outcome criterion8_cohomology(uint64_t seed, bool full) {
  std::vector<std::pair<int, int>> cases = {{2, 4}, {2, 5}};
  if (full) cases.push_back({3, 5});
  std::ostringstream detail;
  for (auto [r, n] : cases) {
    UniformClass uc = uniform_class_grassmannian(r, n);
    for (const auto& [key, c] : uc.in_ut.terms())
      if (key.first.part(0) > n - r)
        return {false, "Schur term with lambda_1 > n-r"};
    int codim = (n - r - 1) * (r - 1);
    Localization loc = interpolate_localization(
        r, n, codim,
        [&](const std::vector<int>& B, const std::vector<Rat>& t) {
          return localize_uniform_closed(B, r, n, t);
        },
        seed);
    if (!gkm_check(loc)) return {false, "GKM edge condition failed"};
    // corrupt one entry: the check must reject it
    if (codim > 0) {
      Localization bad = loc;
      auto it = bad.entries().begin();
      VarShape sh{0, n, false};
      ExpVec e(sh.size(), 0);
      e[sh.t_pos(1)] = codim;
      it->second.add_term(e, 12345);
      if (gkm_check(bad)) return {false, "corrupted localization passed GKM"};
    }
    std::mt19937_64 rng(seed + r * 100 + n);
    Matroid um = Matroid::uniform(r, n);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Rat> t = random_distinct_point(rng, n);
      for (const auto& B : r_subsets(r, n)) {
        Rat closed = localize_uniform_closed(B, r, n, t);
        Rat cls = localize_ut_class(uc.in_ut, B, t);
        if (closed != cls) return {false, "class localization != closed form"};
        Rat perms = localize_orbit_via_permutations(um, B, t);
        if (closed != perms) return {false, "closed form != permutation sum"};
      }
    }
    // omega form: transpose the u-factors of s_{(r-1)^{n-r-1}}(u,u,t)
    Partition rect((n - r - 1) > 0 ? std::vector<int>(n - r - 1, r - 1)
                                   : std::vector<int>{});
    SchurExpansion omega_form(r, n);
    for (const auto& [parts, c] :
         schur_over_alphabets(rect, std::vector<int>{r, r, n})) {
      Partition a = parts[0].transpose();
      Partition b = parts[1].transpose();
      if (a.length() > r || b.length() > r) continue;
      LaurentPoly st = schur_poly(parts[2], n);  // t-alphabet Schur, monomials
      for (const Partition& prod : partitions_of(a.size() + b.size(), r)) {
        Int c2 = lr_coeff(a, b, prod);
        if (c2 == 0) continue;
        for (const auto& [te, tc] : st.terms())
          omega_form.add_term(prod, ExpVec(te.begin(), te.end()), c * c2 * tc);
      }
    }
    if (!(omega_form == uc.in_ut)) return {false, "omega form disagrees"};
    detail << "(" << r << "," << n << ") ok; ";
  }
  return {true, detail.str()};
}

Outcome criterion9_rho_h(bool full) {
  // rank-1 base case
  {
    SchurExpansion one = SchurExpansion::one(1, 2);
    SchurExpansion lhs = multidegree(rho(one), 0 + (2 - 1));
    SchurExpansion rhs = rho_H(1, multidegree(one, 0));
    if (!(lhs == rhs)) return {false, "rho_H pipeline failed for 1 at r=1"};
  }
  int max_n = full ? 6 : 5;
  int checked = 0;
  for (const Rank2Config& cfg : catalog::rank2_configs(max_n)) {
    SchurExpansion k = k_rank2(cfg);
    int codim = codim_matrix_orbit(cfg.matroid(), 2);
    SchurExpansion lhs = multidegree(rho(k), codim + (cfg.n() - 2));
    SchurExpansion rhs = rho_H(1, multidegree(k, codim));
    if (!(lhs == rhs))
      return {false, "rho_H pipeline failed on a rank-2 class (n=" +
                         std::to_string(cfg.n()) + ")"};
    ++checked;
  }
  return {true, std::to_string(checked + 1) + " classes"};
}

Outcome criterion10_degree(bool full) {
  if (degree_uniform(2, 4) != 4) return {false, "degree_uniform(2,4) != 4"};
  RationalMatrix v4 = RationalMatrix::from_int_rows({{1, 0, 1, 1}, {0, 1, 1, 2}});
  IdealPresentation i4 = idoubleprime_generators(v4);
  if (i4.gens.size() != 1) return {false, "I''_v for n=4 is not principal"};
  int gdeg = 0;
  for (const auto& [m, c] : i4.gens[0].terms)
    gdeg = std::max(gdeg, std::accumulate(m.begin(), m.end(), 0));
  if (gdeg != 4) return {false, "quartic generator does not have degree 4"};
  if (!full) return {true, "degree 4 at (2,4); (2,5) checked at full level"};
  if (degree_uniform(2, 5) != 10) return {false, "degree_uniform(2,5) != 10"};
  QuotientData qd = quotient_data(idoubleprime_generators(uniform2n_matrix(5)));
  if (qd.degree != 10) return {false, "oracle degree of I''_v (2x5) != 10"};
  return {true, "degrees 4 and 10 agree with the oracle"};
}

Outcome criterion11_membership(uint64_t seed) {
  RationalMatrix v = RationalMatrix::from_int_rows(
      {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}});
  RationalMatrix w = RationalMatrix::from_int_rows(
      {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 2}, {0, 0, 0, 0, 0}});
  if (!membership_test(w, v)) return {false, "degenerated family member rejected"};

  std::mt19937_64 rng(seed + 11);
  RationalMatrix u4 = uniform2n_matrix(4);
  for (int rep = 0; rep < 100; ++rep) {
    const RationalMatrix& base = (rep % 2 == 0) ? v : u4;
    RationalMatrix g = random_gl(rng, base.rows());
    std::vector<Rat> t = random_torus(rng, base.cols());
    RationalMatrix moved = g.mul(base).scale_cols(t);
    if (!membership_test(moved, base)) return {false, "orbit translate rejected"};
  }
  // cross-ratio perturbation: slopes (0,1,2,3) vs (0,1,2,4)
  RationalMatrix v1 = uniform2n_matrix(4);
  RationalMatrix v2 = v1;
  v2.at(1, 3) = 4;
  if (membership_test(v2, v1)) return {false, "perturbed cross-ratio accepted"};
  return {true, "Remark family, 100 translates, perturbed uniform rejected"};
}

Outcome criterion12_codim(bool full) {
  Matroid u24 = Matroid::uniform(2, 4);
  if (codim_matrix_orbit(u24, 2) != 1) return {false, "codim(U_{2,4}) != 1"};
  QuotientData q4 = quotient_data(idoubleprime_generators(uniform2n_matrix(4)));
  if (2 * 4 - q4.dimension != 1) return {false, "oracle codim (2,4) != 1"};
  if (!full) return {true, "codim 1 at (2,4); (2,5) checked at full level"};
  Matroid u25 = Matroid::uniform(2, 5);
  if (codim_matrix_orbit(u25, 2) != 2) return {false, "codim(U_{2,5}) != 2"};
  QuotientData q5 = quotient_data(idoubleprime_generators(uniform2n_matrix(5)));
  if (2 * 5 - q5.dimension != 2) return {false, "oracle codim (2,5) != 2"};
  return {true, "codims 1 and 2 agree with the oracle"};
}

}  // namespace

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts) {
  Runner r;
  bool full = opts.full;
  r.run(1, "triple agreement for U_{2,4}", criterion1_triple_agreement);
  r.run(2, "tensor characters of U_{2,n}", [&] { return criterion2_tensor_characters(full); });
  r.run(3, "matroid invariance across realizations", criterion3_matroid_invariance);
  r.run(4, "hook web on the rank-2 catalog", [&] { return criterion4_hook_web(full); });
  r.run(5, "documented deviations reproduce exactly", criterion5_documented_deviations);
  r.run(6, "valuativity on the octahedron subdivision", criterion6_valuativity);
  r.run(7, "stabilization against the Groebner oracle", criterion7_stabilization);
  r.run(8, "uniform cohomology class and GKM", [&] { return criterion8_cohomology(opts.seed, full); });
  r.run(9, "rho_H consistency with multidegree", [&] { return criterion9_rho_h(full); });
  r.run(10, "degree of the uniform orbit closure", [&] { return criterion10_degree(full); });
  r.run(11, "membership test", [&] { return criterion11_membership(opts.seed); });
  r.run(12, "codimension against the oracle", [&] { return criterion12_codim(full); });
  return r.results;
}

}  // namespace orbitk
