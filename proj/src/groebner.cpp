#include "orbitk/groebner.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace orbitk {

namespace {

int total_degree(const XMono& m) { return std::accumulate(m.begin(), m.end(), 0); }

// grevlex with x_0 > x_1 > ... : higher total degree wins; ties broken by
// the last differing exponent, smaller exponent there = larger monomial
bool grevlex_less(const XMono& a, const XMono& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

struct GrevlexLess {
  bool operator()(const XMono& a, const XMono& b) const { return grevlex_less(a, b); }
};

using Poly = std::map<XMono, Rat, GrevlexLess>;

Poly to_ordered(const GradedPoly& g) {
  Poly p;
  for (const auto& [m, c] : g.terms)
    if (c != 0) p.emplace(m, c);
  return p;
}

GradedPoly from_ordered(int r, int n, const Poly& p) {
  GradedPoly g;
  g.r = r;
  g.n = n;
  for (const auto& [m, c] : p)
    if (c != 0) g.terms.emplace(m, c);
  return g;
}

const std::pair<const XMono, Rat>& leading(const Poly& p) { return *p.rbegin(); }

bool divides(const XMono& a, const XMono& b) {  // a | b
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

XMono quotient_mono(const XMono& b, const XMono& a) {
  XMono q(b);
  for (size_t k = 0; k < a.size(); ++k) q[k] -= a[k];
  return q;
}

XMono lcm_mono(const XMono& a, const XMono& b) {
  XMono l(a);
  for (size_t k = 0; k < b.size(); ++k) l[k] = std::max(l[k], b[k]);
  return l;
}

void add_scaled(Poly& f, const Rat& c, const XMono& shift, const Poly& g) {
  XMono m(shift.size());
  for (const auto& [e, gc] : g) {
    for (size_t k = 0; k < m.size(); ++k) m[k] = e[k] + shift[k];
    Rat v = c * gc;
    auto [it, inserted] = f.emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) f.erase(it);
    }
  }
}

// full reduction; counts reduction steps against the cap
Poly reduce(Poly f, const std::vector<Poly>& basis, long& steps, long cap) {
  Poly out;
  while (!f.empty()) {
    if (++steps > cap) throw Error("resource_cap", "Groebner step cap exceeded");
    const auto& [lm, lc] = leading(f);
    bool reduced = false;
    for (const Poly& g : basis) {
      const auto& [gm, gc] = leading(g);
      if (!divides(gm, lm)) continue;
      add_scaled(f, -lc / gc, quotient_mono(lm, gm), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.emplace(lm, lc);
      f.erase(std::prev(f.end()));
    }
  }
  return out;
}

void make_monic(Poly& f) {
  if (f.empty()) return;
  Rat lc = leading(f).second;
  for (auto& [m, c] : f) c /= lc;
}

std::vector<Poly> buchberger_core(std::vector<Poly> gens, const GroebnerOptions& opts) {
  long steps = 0;
  std::vector<Poly> basis;
  for (Poly& g : gens) {
    if (g.empty()) continue;
    make_monic(g);
    basis.push_back(std::move(g));
  }
  struct Pair {
    size_t i, j;
    XMono lcm;
    int deg;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      XMono l = lcm_mono(leading(basis[i]).first, leading(basis[j]).first);
      pairs.push_back({i, j, l, total_degree(l)});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    // normal strategy: lowest lcm degree first
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].deg < pairs[best].deg) best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + best);

    const XMono& mi = leading(basis[pr.i]).first;
    const XMono& mj = leading(basis[pr.j]).first;
    // product criterion
    XMono sum(mi.size());
    for (size_t k = 0; k < mi.size(); ++k) sum[k] = mi[k] + mj[k];
    if (sum == pr.lcm) continue;
    // chain criterion
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(leading(basis[k]).first, pr.lcm)) continue;
      auto seen = [&](size_t a, size_t b) {
        for (const Pair& q : pairs)
          if ((q.i == std::min(a, b) && q.j == std::max(a, b))) return true;
        return false;
      };
      if (!seen(pr.i, k) && !seen(pr.j, k)) chained = true;
    }
    if (chained) continue;

    Poly spoly;
    add_scaled(spoly, Rat(1), quotient_mono(pr.lcm, mi), basis[pr.i]);
    add_scaled(spoly, Rat(-1), quotient_mono(pr.lcm, mj), basis[pr.j]);
    Poly nf = reduce(std::move(spoly), basis, steps, opts.step_cap);
    if (nf.empty()) continue;
    make_monic(nf);
    basis.push_back(std::move(nf));
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const XMono& mi = leading(basis[i]).first;
      const XMono& mj = leading(basis[j]).first;
      if (divides(mj, mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // reduce tails
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly nf = reduce(minimal[i], others, steps, opts.step_cap);
    if (!nf.empty()) {
      make_monic(nf);
      reduced.push_back(std::move(nf));
    }
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return grevlex_less(leading(a).first, leading(b).first);
  });
  return reduced;
}

}  // namespace

GradedPoly make_graded_poly(int r, int n, std::map<XMono, Rat> terms) {
  GradedPoly g;
  g.r = r;
  g.n = n;
  bool first = true;
  std::pair<ExpVec, ExpVec> w0;
  for (auto& [m, c] : terms) {
    if (c == 0) continue;
    if (static_cast<int>(m.size()) != r * n)
      throw Error("bad_poly", "monomial length mismatch");
    auto w = xmono_weight(r, n, m);
    if (first) {
      w0 = w;
      first = false;
    } else if (w != w0) {
      throw Error("not_homogeneous", "generator is not multigraded-homogeneous");
    }
    g.terms.emplace(m, c);
  }
  return g;
}

std::pair<ExpVec, ExpVec> xmono_weight(int r, int n, const XMono& m) {
  ExpVec a(r, 0), b(n, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      int e = m[i * n + j];
      a[i] += e;
      b[j] += e;
    }
  return {a, b};
}

RationalMatrix gale_dual(const RationalMatrix& v) { return v.kernel_basis(); }

namespace {

// determinant of a k x k matrix of (variable index, rational coeff) entries,
// expanded over permutations; entry variable < 0 encodes a zero entry
GradedPoly linear_matrix_det(int r, int n, const std::vector<std::vector<std::pair<int, Rat>>>& m) {
  int k = static_cast<int>(m.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<XMono, Rat> terms;
  do {
    int sign = 1;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    Rat coeff(sign);
    XMono mono(r * n, 0);
    bool zero = false;
    for (int row = 0; row < k; ++row) {
      const auto& [var, c] = m[row][perm[row]];
      if (var < 0 || c == 0) { zero = true; break; }
      coeff *= c;
      mono[var] += 1;
    }
    if (zero) continue;
    auto [it, inserted] = terms.emplace(mono, coeff);
    if (!inserted) it->second += coeff;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = terms.begin(); it != terms.end();)
    it = (it->second == 0) ? terms.erase(it) : std::next(it);
  GradedPoly g;
  g.r = r;
  g.n = n;
  g.terms = std::move(terms);
  return g;
}

}  // namespace

IdealPresentation iprime_generators(const RationalMatrix& v) {
  int r = v.rows(), n = v.cols();
  if (n > 16) throw Error("bad_matrix", "too many columns");
  IdealPresentation ideal;
  ideal.r = r;
  ideal.n = n;
  ideal.provenance = "iprime";
  for (uint32_t J = 1; J < (1u << n); ++J) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (J & (1u << j)) cols.push_back(j);
    int ell = static_cast<int>(cols.size());
    RationalMatrix vj = v.cols_subset(J);
    int rk = vj.rank();
    int d = ell - rk;
    if (d == 0) continue;                    // independent: no constraint
    if (r * d < ell) continue;               // no size-ell minors exist
    RationalMatrix perp = vj.kernel_basis();  // d x ell
    // big matrix rows indexed by (i, l) in [r] x [d]; column i has the
    // entries of x_{j_i} (x) (v_J-perp)_i
    std::vector<std::vector<std::pair<int, Rat>>> big(r * d,
        std::vector<std::pair<int, Rat>>(ell));
    for (int c = 0; c < ell; ++c)
      for (int i = 0; i < r; ++i)
        for (int l = 0; l < d; ++l)
          big[i * d + l][c] = {i * n + cols[c], perp.at(l, c)};
    // all size-ell row subsets
    std::vector<int> rowsel(ell);
    std::iota(rowsel.begin(), rowsel.end(), 0);
    int nrows = r * d;
    while (true) {
      std::vector<std::vector<std::pair<int, Rat>>> sub;
      for (int i : rowsel) sub.push_back(big[i]);
      GradedPoly minor = linear_matrix_det(r, n, sub);
      if (!minor.is_zero())
        ideal.gens.push_back(make_graded_poly(r, n, std::move(minor.terms)));
      int i = ell - 1;
      while (i >= 0 && rowsel[i] == nrows - ell + i) --i;
      if (i < 0) break;
      ++rowsel[i];
      for (int j = i + 1; j < ell; ++j) rowsel[j] = rowsel[j - 1] + 1;
    }
  }
  return ideal;
}

IdealPresentation idoubleprime_generators(const RationalMatrix& v) {
  int r = v.rows(), n = v.cols();
  if (r != 2) throw Error("bad_argument", "I''_v needs a 2 x n matrix");
  Matroid m = Matroid::from_matrix(v);
  if (m.rank() != 2 || m != Matroid::uniform(2, n))
    throw Error("bad_argument", "I''_v needs a uniform rank-2 matroid");
  IdealPresentation ideal;
  ideal.r = 2;
  ideal.n = n;
  ideal.provenance = "idoubleprime";
  // 4 x n matrix with column j = (x_1j, x_2j)^t (x) v_j
  std::vector<int> cols(4);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          cols = {a, b, c, d};
          std::vector<std::vector<std::pair<int, Rat>>> sub(4,
              std::vector<std::pair<int, Rat>>(4));
          for (int cc = 0; cc < 4; ++cc) {
            int j = cols[cc];
            sub[0][cc] = {0 * n + j, v.at(0, j)};
            sub[1][cc] = {0 * n + j, v.at(1, j)};
            sub[2][cc] = {1 * n + j, v.at(0, j)};
            sub[3][cc] = {1 * n + j, v.at(1, j)};
          }
          GradedPoly minor = linear_matrix_det(2, n, sub);
          if (!minor.is_zero())
            ideal.gens.push_back(make_graded_poly(2, n, std::move(minor.terms)));
        }
  return ideal;
}

IdealPresentation generic_minors_ideal(int r, int n) {
  IdealPresentation ideal;
  ideal.r = r;
  ideal.n = n;
  ideal.provenance = "minors";
  for (int i1 = 0; i1 < r; ++i1)
    for (int i2 = i1 + 1; i2 < r; ++i2)
      for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2) {
          std::map<XMono, Rat> terms;
          XMono m1(r * n, 0), m2(r * n, 0);
          m1[i1 * n + j1]++; m1[i2 * n + j2]++;
          m2[i1 * n + j2]++; m2[i2 * n + j1]++;
          terms.emplace(m1, Rat(1));
          terms.emplace(m2, Rat(-1));
          ideal.gens.push_back(make_graded_poly(r, n, std::move(terms)));
        }
  return ideal;
}

std::vector<GradedPoly> buchberger(const IdealPresentation& ideal,
                                   const GroebnerOptions& opts) {
  std::vector<Poly> gens;
  for (const GradedPoly& g : ideal.gens) gens.push_back(to_ordered(g));
  std::vector<Poly> gb = buchberger_core(std::move(gens), opts);
  std::vector<GradedPoly> out;
  for (const Poly& p : gb) out.push_back(from_ordered(ideal.r, ideal.n, p));
  return out;
}

GradedPoly normal_form(const GradedPoly& f, const std::vector<GradedPoly>& gb) {
  std::vector<Poly> basis;
  for (const GradedPoly& g : gb) basis.push_back(to_ordered(g));
  long steps = 0;
  Poly nf = reduce(to_ordered(f), basis, steps, 100'000'000L);
  return from_ordered(f.r, f.n, nf);
}

namespace {

// K-numerator of R / monomial ideal by pivot splitting:
// K(I) = K(I + <x>) + w(x) K(I : x), memoized on the minimal generator set.
struct MonomialKEngine {
  int r, n;
  VarShape sh;
  std::map<std::vector<XMono>, LaurentPoly> memo;

  LaurentPoly weight_poly(const XMono& m) {
    auto [a, b] = xmono_weight(r, n, m);
    ExpVec e(sh.size(), 0);
    for (int i = 0; i < r; ++i) e[sh.u_pos(i + 1)] = a[i];
    for (int j = 0; j < n; ++j) e[sh.t_pos(j + 1)] = b[j];
    return LaurentPoly::monomial(sh, e, 1);
  }

  static std::vector<XMono> minimalize(std::vector<XMono> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<XMono> out;
    for (size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < gens.size() && !redundant; ++j)
        if (i != j && divides(gens[j], gens[i]) && !(gens[j] == gens[i] && j > i))
          redundant = true;
      if (!redundant) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  LaurentPoly k_numerator(std::vector<XMono> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return LaurentPoly::constant(sh, 1);
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;

    LaurentPoly result(sh);
    // complete intersection shortcut: pairwise disjoint supports
    bool disjoint = true;
    std::vector<int> used(r * n, 0);
    for (const XMono& m : gens)
      for (int k = 0; k < r * n; ++k)
        if (m[k] > 0 && used[k]++) disjoint = false;
    if (disjoint) {
      result = LaurentPoly::constant(sh, 1);
      for (const XMono& m : gens) {
        LaurentPoly f = LaurentPoly::constant(sh, 1);
        f -= weight_poly(m);
        result = result * f;
      }
    } else {
      // pivot: a variable occurring in the most generators
      int best = -1, bestcount = 0;
      for (int k = 0; k < r * n; ++k) {
        int count = 0;
        for (const XMono& m : gens)
          if (m[k] > 0) ++count;
        if (count > bestcount) { bestcount = count; best = k; }
      }
      XMono pivot(r * n, 0);
      pivot[best] = 1;
      std::vector<XMono> plus(gens), colon;
      plus.push_back(pivot);
      for (const XMono& m : gens) {
        XMono q(m);
        if (q[best] > 0) q[best]--;
        colon.push_back(std::move(q));
      }
      result = k_numerator(std::move(plus)) + weight_poly(pivot) * k_numerator(std::move(colon));
    }
    memo.emplace(std::move(gens), result);
    return result;
  }

  // Krull dimension: largest variable subset meeting no generator support
  int dimension(const std::vector<XMono>& gens_in) {
    std::vector<XMono> gens = minimalize(gens_in);
    if (gens.empty()) return r * n;
    if (r * n > 24) throw Error("resource_cap", "too many variables for dimension sweep");
    std::vector<uint32_t> supports;
    for (const XMono& m : gens) {
      uint32_t s = 0;
      for (int k = 0; k < r * n; ++k)
        if (m[k] > 0) s |= (1u << k);
      supports.push_back(s);
    }
    int best = 0;
    for (uint32_t s = 0; s < (1u << (r * n)); ++s) {
      bool ok = true;
      for (uint32_t sup : supports)
        if ((sup & ~s) == 0) { ok = false; break; }
      if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
  }
};

}  // namespace

QuotientData quotient_data(const IdealPresentation& ideal, const GroebnerOptions& opts) {
  std::vector<GradedPoly> gb = buchberger(ideal, opts);
  int r = ideal.r, n = ideal.n;
  MonomialKEngine engine{r, n, VarShape{r, n, false}, {}};

  std::vector<XMono> leads;
  bool squarefree = true;
  for (const GradedPoly& g : gb) {
    Poly p = to_ordered(g);
    leads.push_back(leading(p).first);
    for (int e : leads.back())
      if (e > 1) squarefree = false;
  }

  QuotientData out;
  out.groebner_size = gb.size();
  out.initial_ideal_squarefree = squarefree;
  LaurentPoly knum = engine.k_numerator(leads);
  out.k_polynomial = schur_expand(knum, r);  // errors "not_symmetric" for non-G-stable input
  out.dimension = engine.dimension(leads);

  // degree: specialize u -> z, t -> 1 and strip (1-z)^codim
  int codim = r * n - out.dimension;
  int maxdeg = 0;
  const VarShape& sh = knum.shape();
  for (const auto& [e, c] : knum.terms()) {
    int zdeg = 0;
    for (int i = 0; i < r; ++i) zdeg += e[sh.u_pos(i + 1)];
    maxdeg = std::max(maxdeg, zdeg);
  }
  std::vector<Int> kz(maxdeg + 1, 0);
  for (const auto& [e, c] : knum.terms()) {
    int zdeg = 0;
    for (int i = 0; i < r; ++i) zdeg += e[sh.u_pos(i + 1)];
    kz[zdeg] += c;
  }
  for (int step = 0; step < codim; ++step) {
    // k(z) = (1-z) q(z) with q_d = sum_{i<=d} k_i; exact iff k(1) = 0
    std::vector<Int> q(kz.size(), 0);
    Int prefix = 0;
    for (size_t d = 0; d < kz.size(); ++d) {
      prefix += kz[d];
      q[d] = prefix;
    }
    if (prefix != 0)
      throw Error("degree_failure", "K-numerator not divisible by (1-z)^codim");
    q.pop_back();  // top coefficient is the zero remainder slot
    kz = std::move(q);
  }
  Int deg = 0;
  for (const Int& c : kz) deg += c;
  out.degree = deg.get_si();
  return out;
}

SchurExpansion k_polynomial_of_quotient(const IdealPresentation& ideal,
                                        const GroebnerOptions& opts) {
  return quotient_data(ideal, opts).k_polynomial;
}

int dimension_of_quotient(const IdealPresentation& ideal, const GroebnerOptions& opts) {
  return quotient_data(ideal, opts).dimension;
}

bool membership_test(const RationalMatrix& w, const RationalMatrix& v) {
  if (w.rows() != v.rows() || w.cols() != v.cols())
    throw Error("bad_argument", "membership test needs matrices of equal shape");
  int r = v.rows(), n = v.cols();
  for (uint32_t J = 1; J < (1u << n); ++J) {
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (J & (1u << j)) cols.push_back(j);
    int ell = static_cast<int>(cols.size());
    RationalMatrix vj = v.cols_subset(J);
    int d = ell - vj.rank();
    if (d == 0) continue;
    if (static_cast<long>(r) * d < ell) continue;  // always dependent
    RationalMatrix perp = vj.kernel_basis();       // d x ell
    RationalMatrix tensors(r * d, ell);
    for (int c = 0; c < ell; ++c)
      for (int i = 0; i < r; ++i)
        for (int l = 0; l < d; ++l)
          tensors.at(i * d + l, c) = w.at(i, cols[c]) * perp.at(l, c);
    if (tensors.rank() == ell) return false;
  }
  return true;
}

}  // namespace orbitk
