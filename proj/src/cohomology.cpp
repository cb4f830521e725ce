#include "orbitk/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace orbitk {

SchurExpansion multidegree(const SchurExpansion& e, int codim) {
  if (codim < 0) throw Error("bad_argument", "negative codimension");
  LaurentPoly f = substitute_affine(e.to_poly());
  if (f.is_zero()) return SchurExpansion(e.r(), e.n());
  if (f.min_total_degree() < codim)
    throw Error("below_codim", "nonzero terms below the requested codimension");
  return schur_expand(f.total_degree_part(codim), e.r());
}

int codim_matrix_orbit(const Matroid& m, int r) {
  if (m.rank() != r) throw Error("bad_argument", "matroid rank differs from r");
  int n = m.n();
  int c = static_cast<int>(m.connected_components().size());
  return r * n - (r * r + n - c);
}

Partition rectangle_complement(const Partition& lambda, int rows, int cols) {
  if (lambda.length() > rows || lambda.part(0) > cols)
    throw Error("bad_argument", "partition does not fit in the rectangle");
  std::vector<int> parts(rows);
  for (int i = 0; i < rows; ++i) parts[i] = cols - lambda.part(rows - 1 - i);
  return Partition(std::move(parts));
}

UniformClass uniform_class_grassmannian(int r, int n) {
  if (r < 2 || r >= n) throw Error("bad_argument", "need 2 <= r < n");
  int rows = r - 1, cols = n - r - 1;
  UniformClass out{{}, SchurExpansion(r, n)};

  std::vector<Partition> rect_partitions;
  for (int k = 0; k <= rows * cols; ++k)
    for (const Partition& lam : partitions_of(k, rows))
      if (lam.part(0) <= cols) rect_partitions.push_back(lam);

  for (const Partition& lam : rect_partitions) {
    Partition tilde = rectangle_complement(lam, rows, cols);
    // the Q-side symbol pairing with s_lambda(S-dual): the transposed
    // complement localizes correctly (the printed pairing does not)
    out.bundle_pairs.emplace_back(lam, tilde.transpose());

    // (u,t) form: sum_{mu,nu} c^{tilde}_{mu nu} s_lam(u) s_{mu'}(t) s_nu(u)
    for (int k = 0; k <= tilde.size(); ++k)
      for (const Partition& mu : partitions_of(k)) {
        Partition muT = mu.transpose();
        for (const Partition& nu : partitions_of(tilde.size() - k, r)) {
          Int c = lr_coeff(mu, nu, tilde);
          if (c == 0) continue;
          // s_lam(u) s_nu(u) by LR, s_{mu'}(t) monomial-expanded
          LaurentPoly smt = schur_poly(muT, n);  // in n "u"-slots, reuse as t
          for (const Partition& prod : partitions_of(lam.size() + nu.size(), r)) {
            Int c2 = lr_coeff(lam, nu, prod);
            if (c2 == 0) continue;
            for (const auto& [te, tc] : smt.terms())
              out.in_ut.add_term(prod, ExpVec(te.begin(), te.end()), c * c2 * tc);
          }
        }
      }
  }
  return out;
}

Rat localize_uniform_closed(const std::vector<int>& B, int r, int n,
                            const std::vector<Rat>& t) {
  if (static_cast<int>(t.size()) != n) throw Error("bad_argument", "t-point length mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t[a] == t[b]) throw Error("bad_argument", "t-point entries must be distinct");
  if (static_cast<int>(B.size()) != r) throw Error("bad_argument", "B must have r elements");
  std::vector<bool> in_b(n + 1, false);
  for (int i : B) in_b[i] = true;

  Rat prefactor(1);
  for (int i : B)
    for (int j = 1; j <= n; ++j)
      if (!in_b[j]) prefactor *= (t[j - 1] - t[i - 1]);

  Rat sum(0);
  for (int ir : B) {
    Rat term(1);
    for (int i : B)
      if (i != ir) term /= (t[ir - 1] - t[i - 1]);
    for (int j = 1; j <= n; ++j)
      if (!in_b[j]) term /= (t[j - 1] - t[ir - 1]);
    sum += term;
  }
  return prefactor * sum;
}

namespace {
// greedy basis of a permutation: scan left to right, keep independent
uint32_t lex_first_basis(const Matroid& m, const std::vector<int>& perm) {
  uint32_t cur = 0;
  for (int e : perm) {
    uint32_t cand = cur | (1u << (e - 1));
    if (m.independent(cand)) cur = cand;
    if (std::popcount(cur) == m.rank()) break;
  }
  return cur;
}
}  // namespace

Rat localize_orbit_via_permutations(const Matroid& m, const std::vector<int>& B,
                                    const std::vector<Rat>& t) {
  int n = m.n();
  if (n > 9) throw Error("resource_cap", "permutation sweep limited to n <= 9");
  if (static_cast<int>(t.size()) != n) throw Error("bad_argument", "t-point length mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t[a] == t[b]) throw Error("bad_argument", "t-point entries must be distinct");

  uint32_t bmask = 0;
  for (int i : B) bmask |= (1u << (i - 1));
  if (!m.is_basis(bmask)) return Rat(0);

  std::vector<bool> in_b(n + 1, false);
  for (int i : B) in_b[i] = true;
  Rat prefactor(1);
  for (int i : B)
    for (int j = 1; j <= n; ++j)
      if (!in_b[j]) prefactor *= (t[j - 1] - t[i - 1]);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Rat sum(0);
  do {
    if (lex_first_basis(m, perm) != bmask) continue;
    Rat term(1);
    for (int k = 0; k + 1 < n; ++k) term /= (t[perm[k + 1] - 1] - t[perm[k] - 1]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return prefactor * sum;
}

Rat klocalize_orbit(const Matroid& m, const std::vector<int>& B,
                    const std::vector<Rat>& t) {
  int n = m.n();
  if (n > 9) throw Error("resource_cap", "permutation sweep limited to n <= 9");
  if (static_cast<int>(t.size()) != n) throw Error("bad_argument", "t-point length mismatch");
  for (const Rat& x : t)
    if (x == 0) throw Error("bad_argument", "t-point entries must be nonzero");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (t[a] == t[b]) throw Error("bad_argument", "t-point entries must be distinct");

  uint32_t bmask = 0;
  for (int i : B) bmask |= (1u << (i - 1));
  if (!m.is_basis(bmask)) return Rat(0);

  std::vector<bool> in_b(n + 1, false);
  for (int i : B) in_b[i] = true;
  Rat prefactor(1);
  for (int i : B)
    for (int j = 1; j <= n; ++j)
      if (!in_b[j]) prefactor *= (Rat(1) - t[j - 1] / t[i - 1]);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Rat sum(0);
  do {
    if (lex_first_basis(m, perm) != bmask) continue;
    Rat term(1);
    for (int k = 0; k + 1 < n; ++k) {
      Rat factor = Rat(1) - t[perm[k + 1] - 1] / t[perm[k] - 1];
      if (factor == 0) throw Error("bad_argument", "degenerate t-point");
      term /= factor;
    }
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return prefactor * sum;
}

std::vector<std::vector<int>> r_subsets(int r, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(r);
  std::iota(cur.begin(), cur.end(), 1);
  if (r == 0) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + 1 + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {
// monomials of total degree d in n variables
void degree_monomials_rec(int n, int d, int pos, ExpVec& cur, std::vector<ExpVec>& out) {
  if (pos == n - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur[pos] = e;
    degree_monomials_rec(n, d - e, pos + 1, cur, out);
  }
}

std::vector<ExpVec> degree_monomials(int n, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(n, 0);
  if (n == 0) return out;
  degree_monomials_rec(n, d, 0, cur, out);
  return out;
}

Rat eval_mono(const ExpVec& e, const std::vector<Rat>& x) {
  Rat v(1);
  for (size_t k = 0; k < e.size(); ++k)
    for (int rep = 0; rep < e[k]; ++rep) v *= x[k];
  return v;
}
}  // namespace

Localization interpolate_localization(
    int r, int n, int degree,
    const std::function<Rat(const std::vector<int>&, const std::vector<Rat>&)>& eval,
    uint64_t seed) {
  std::vector<ExpVec> monos = degree_monomials(n, degree);
  size_t m = monos.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(1, 10000);

  auto sample_point = [&]() {
    while (true) {
      std::vector<Rat> t(n);
      for (int j = 0; j < n; ++j) t[j] = coord(rng);
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int b = a + 1; b < n; ++b)
          if (t[a] == t[b]) { ok = false; break; }
      if (ok) return t;
    }
  };

  // shared sample points: m for the square system plus 5 checks
  std::vector<std::vector<Rat>> pts;
  for (size_t k = 0; k < m + 5; ++k) pts.push_back(sample_point());

  Localization loc(r, n);
  VarShape sh{0, n, false};
  for (const auto& B : r_subsets(r, n)) {
    // solve V c = y on the first m points
    RationalMatrix sys(static_cast<int>(m), static_cast<int>(m) + 1);
    for (size_t row = 0; row < m; ++row) {
      for (size_t col = 0; col < m; ++col)
        sys.at(static_cast<int>(row), static_cast<int>(col)) = eval_mono(monos[col], pts[row]);
      sys.at(static_cast<int>(row), static_cast<int>(m)) = eval(B, pts[row]);
    }
    std::vector<int> pivots = rref_in_place(sys);
    if (pivots.size() != m ||
        std::any_of(pivots.begin(), pivots.end(),
                    [&](int p) { return p == static_cast<int>(m); }))
      throw Error("interpolation", "degenerate interpolation system");
    LaurentPoly f(sh);
    for (size_t col = 0; col < m; ++col) {
      Rat c = sys.at(static_cast<int>(col), static_cast<int>(m));
      if (c == 0) continue;
      if (c.get_den() != 1)
        throw Error("interpolation", "non-integral localization coefficient");
      ExpVec e(sh.size(), 0);
      for (int j = 0; j < n; ++j) e[sh.t_pos(j + 1)] = monos[col][j];
      f.add_term(e, Int(c.get_num()));
    }
    // consistency on the extra points
    for (size_t k = m; k < m + 5; ++k) {
      Rat got(0);
      for (const auto& [e, c] : f.terms()) {
        ExpVec te(n);
        for (int j = 0; j < n; ++j) te[j] = e[sh.t_pos(j + 1)];
        got += Rat(c) * eval_mono(te, pts[k]);
      }
      if (got != eval(B, pts[k]))
        throw Error("interpolation",
                    "evaluations inconsistent with the degree bound");
    }
    loc.entries().emplace(B, std::move(f));
  }
  return loc;
}

bool gkm_check(const Localization& loc) {
  int n = loc.n();
  VarShape sh{0, n, false};
  for (const auto& [B, fB] : loc.entries()) {
    std::vector<bool> in_b(n + 1, false);
    for (int i : B) in_b[i] = true;
    for (int i : B)
      for (int j = 1; j <= n; ++j) {
        if (in_b[j]) continue;
        std::vector<int> B2;
        for (int x : B)
          if (x != i) B2.push_back(x);
        B2.push_back(j);
        std::sort(B2.begin(), B2.end());
        auto it = loc.entries().find(B2);
        if (it == loc.entries().end())
          throw Error("bad_argument", "localization table is missing a fixed point");
        LaurentPoly diff = fB - it->second;
        if (diff.is_zero()) continue;
        LaurentPoly edge = LaurentPoly::t_var(sh, j) - LaurentPoly::t_var(sh, i);
        try {
          exact_divide(diff, edge);
        } catch (const Error& err) {
          if (err.code() == "not_divisible") return false;
          throw;
        }
      }
  }
  return true;
}

long degree_uniform(int r, int n) {
  if (r < 2 || r >= n) throw Error("bad_argument", "need 2 <= r < n");
  int rows = r - 1, cols = n - r - 1;
  Int total = 0;
  for (int k = 0; k <= rows * cols; ++k)
    for (const Partition& lam : partitions_of(k, rows)) {
      if (lam.part(0) > cols) continue;
      Partition tilde = rectangle_complement(lam, rows, cols);
      // s_lambda(1^r) = number of SSYT with entries <= r
      auto dim = [&](const Partition& p) {
        LaurentPoly s = schur_poly(p, r);
        Int d = 0;
        for (const auto& [e, c] : s.terms()) d += c;
        return d;
      };
      total += dim(lam) * dim(tilde);
    }
  return total.get_si();
}

Rat localize_ut_class(const SchurExpansion& e, const std::vector<int>& B,
                      const std::vector<Rat>& t) {
  // u-Schur polynomials evaluate at {-t_i : i in B}; t-monomials at t
  int r = e.r(), n = e.n();
  if (static_cast<int>(B.size()) != r) throw Error("bad_argument", "B must have r elements");
  std::vector<Rat> ueval;
  for (int i : B) ueval.push_back(-t[i - 1]);
  Rat total(0);
  for (const auto& [key, c] : e.terms()) {
    LaurentPoly s = schur_poly(key.first, r);
    Rat sval(0);
    for (const auto& [se, sc] : s.terms()) {
      Rat m(1);
      for (int i = 0; i < r; ++i)
        for (int rep = 0; rep < se[i]; ++rep) m *= ueval[i];
      sval += Rat(sc) * m;
    }
    Rat tval(1);
    for (int j = 0; j < n; ++j)
      for (int rep = 0; rep < key.second[j]; ++rep) tval *= t[j];
    total += Rat(c) * sval * tval;
  }
  return total;
}

}  // namespace orbitk
