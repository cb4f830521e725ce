#include "orbitk/kclass.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace orbitk {

Rank2Config Rank2Config::from_classes(std::vector<int> column_class) {
  int m = 0;
  for (int c : column_class) {
    if (c < 0) throw Error("bad_argument", "negative class id");
    m = std::max(m, c);
  }
  std::vector<bool> seen(m + 1, false);
  for (int c : column_class) seen[c] = true;
  for (int c = 1; c <= m; ++c)
    if (!seen[c]) throw Error("bad_argument", "class ids must be contiguous");
  int nonzero_classes = m;
  if (nonzero_classes < 2)
    throw Error("bad_argument", "rank-2 configuration needs >= 2 parallel classes");
  Rank2Config cfg;
  cfg.column_class_ = std::move(column_class);
  return cfg;
}

Rank2Config Rank2Config::from_mu(const Partition& mu) {
  if (mu.length() < 2)
    throw Error("bad_argument", "rank-2 configuration needs >= 2 parallel classes");
  std::vector<int> cls;
  for (int i = 0; i < mu.length(); ++i)
    for (int c = 0; c < mu.part(i); ++c) cls.push_back(i + 1);
  return from_classes(std::move(cls));
}

Rank2Config Rank2Config::from_matrix(const RationalMatrix& v) {
  if (v.rows() != 2 || v.rank() != 2)
    throw Error("bad_argument", "rank-2 configuration needs a rank-2 2 x n matrix");
  int n = v.cols();
  std::vector<int> cls(n, 0);
  int next = 1;
  for (int j = 0; j < n; ++j) {
    if (v.at(0, j) == 0 && v.at(1, j) == 0) continue;  // zero column
    for (int i = 0; i < j; ++i) {
      if (cls[i] == 0) continue;
      if (v.at(0, i) * v.at(1, j) == v.at(0, j) * v.at(1, i)) {
        cls[j] = cls[i];
        break;
      }
    }
    if (cls[j] == 0) cls[j] = next++;
  }
  return from_classes(std::move(cls));
}

int Rank2Config::num_classes() const {
  int m = 0;
  for (int c : column_class_) m = std::max(m, c);
  return m;
}

int Rank2Config::zero_columns() const {
  return static_cast<int>(std::count(column_class_.begin(), column_class_.end(), 0));
}

Partition Rank2Config::mu() const {
  std::vector<int> sizes(num_classes(), 0);
  for (int c : column_class_)
    if (c > 0) sizes[c - 1]++;
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return Partition(std::move(sizes));
}

Matroid Rank2Config::matroid() const { return Matroid::from_matrix(realization()); }

RationalMatrix Rank2Config::realization() const {
  // class i gets the direction (1, i-1), except class 1 = (0, 1)
  int n = this->n();
  RationalMatrix v(2, n);
  for (int j = 0; j < n; ++j) {
    int c = column_class_[j];
    if (c == 0) continue;
    if (c == 1) {
      v.at(0, j) = 0;
      v.at(1, j) = 1;
    } else {
      v.at(0, j) = 1;
      v.at(1, j) = c - 2;
    }
  }
  return v;
}

SchurExpansion k_uniform_rank2(int n) {
  if (n < 2) throw Error("bad_argument", "uniform rank 2 needs n >= 2");
  SchurExpansion out = SchurExpansion::one(2, n);
  for (int l2 = 2; 2 * l2 <= n; ++l2)
    for (int l1 = l2; l1 + l2 <= n; ++l1) {
      Partition lambda{l1, l2};
      Int s11 = l1 - l2 + 1;  // s_lambda(1,1)
      Int sign = ((l1 + l2) % 2 == 0) ? 1 : -1;
      Int coeff = -sign * s11;
      LaurentPoly ek = elementary_symmetric_t(VarShape{0, n, false}, l1 + l2);
      for (const auto& [e, one] : ek.terms())
        out.add_term(lambda, ExpVec(e.begin(), e.end()), coeff);
    }
  return out;
}

SchurExpansion add_zero_column(const SchurExpansion& e) {
  int r = e.r(), n = e.n();
  SchurExpansion wide = e.extended_to_n(n + 1);
  // multiply by prod_i (1 - u_i t_{n+1}) = sum_k (-1)^k e_k(u) t_{n+1}^k
  SchurExpansion out(r, n + 1);
  for (int k = 0; k <= r; ++k) {
    Partition ek_u = (k == 0) ? Partition{} : Partition(std::vector<int>(k, 1));
    Int sign = (k % 2 == 0) ? 1 : -1;
    SchurExpansion factor(r, n + 1);
    ExpVec t(n + 1, 0);
    t[n] = k;
    factor.add_term(ek_u, t, sign);
    out += schur_product(wide, factor);
  }
  return out;
}

SchurExpansion duplicate_last_column(const SchurExpansion& e) {
  int n = e.n();
  if (n < 2) throw Error("bad_argument", "need at least two columns");
  LaurentPoly f = e.to_poly();
  return schur_expand(demazure(n - 1, f), e.r());
}

SchurExpansion k_rank2(const Rank2Config& cfg) {
  int m = cfg.num_classes();
  const std::vector<int>& cls = cfg.column_class();

  // representatives: first occurrence of each class, in column order
  std::vector<int> rep_col(m + 1, -1);
  for (int j = 0; j < cfg.n(); ++j)
    if (cls[j] > 0 && rep_col[cls[j]] < 0) rep_col[cls[j]] = j;

  SchurExpansion e = k_uniform_rank2(m);
  std::vector<int> pos2col;  // original column of each current t-slot
  for (int c = 1; c <= m; ++c) pos2col.push_back(rep_col[c]);

  // insert the duplicate columns one at a time
  for (int j = 0; j < cfg.n(); ++j) {
    int c = cls[j];
    if (c == 0 || rep_col[c] == j) continue;
    // move some column of class c to the last slot
    int cur = static_cast<int>(pos2col.size());
    int src = -1;
    for (int p = 0; p < cur; ++p)
      if (cls[pos2col[p]] == c) src = p;
    // move slot src to the end; slots after it shift down by one
    if (src != cur - 1) {
      std::vector<int> relabel(cur);
      for (int p = 0; p < cur; ++p) {
        if (p < src) relabel[p] = p + 1;
        else if (p == src) relabel[p] = cur;
        else relabel[p] = p;
      }
      e = e.relabel_t(relabel);
      int moved = pos2col[src];
      pos2col.erase(pos2col.begin() + src);
      pos2col.push_back(moved);
    }
    e = add_zero_column(e);
    e = duplicate_last_column(e);
    pos2col.push_back(j);
  }

  // zero columns last
  for (int j = 0; j < cfg.n(); ++j) {
    if (cls[j] != 0) continue;
    e = add_zero_column(e);
    pos2col.push_back(j);
  }

  // un-permute into the original column labels
  std::vector<int> final_label(pos2col.size());
  for (size_t p = 0; p < pos2col.size(); ++p) final_label[p] = pos2col[p] + 1;
  return e.relabel_t(final_label);
}

SchurExpansion k_rank1_parallel(int n) {
  if (n < 1) throw Error("bad_argument", "need n >= 1");
  return rho(SchurExpansion::one(1, n));
}

SchurExpansion k_rank2_closed_form_as_printed(const Rank2Config& cfg) {
  if (cfg.zero_columns() > 0)
    throw Error("bad_argument", "printed closed form assumes no zero columns");
  int n = cfg.n();
  const std::vector<int>& cls = cfg.column_class();
  SchurExpansion out(2, n);
  out.add_term(Partition{}, ExpVec(n, 0), 1);
  for (uint32_t b = 1; b < (1u << n); ++b) {
    int size = std::popcount(b);
    // parallelism partition of the subconfiguration
    std::map<int, int> class_sizes;
    for (int j = 0; j < n; ++j)
      if (b & (1u << j)) class_sizes[cls[j]]++;
    std::vector<int> mu_parts;
    for (auto& [c, s] : class_sizes) mu_parts.push_back(s);
    std::sort(mu_parts.begin(), mu_parts.end(), std::greater<int>());
    Partition mu(mu_parts);
    Partition muT = mu.transpose();
    int ell = mu.length();
    int rank_b = std::min(ell, 2);

    ExpVec beta(n, 0);
    for (int j = 0; j < n; ++j)
      if (b & (1u << j)) beta[j] = 1;

    for (int k = 1; 2 * k <= size; ++k) {
      Int d = 0;
      if (k == 1) {
        d = (rank_b == 1) ? Int(((size + 1) % 2 == 0) ? 1 : -1) : Int(0);
      } else {
        if (ell >= 4) {
          int s = 0;
          for (int i = 0; i < k - 1; ++i) s += muT.part(i);
          if (s >= 2 * k - 1) {
            Int sign = ((size + 1) % 2 == 0) ? 1 : -1;
            d = sign * Int(s - 2 * k + 1);
          }
        }
      }
      if (d != 0) out.add_term(Partition{size - k, k}, beta, d);
    }
  }
  return out;
}

std::vector<CoeffDiscrepancy> compare_rank2_closed_form(const Rank2Config& cfg) {
  SchurExpansion printed = k_rank2_closed_form_as_printed(cfg);
  SchurExpansion normative = k_rank2(cfg);
  std::vector<CoeffDiscrepancy> out;
  SchurExpansion diff = printed - normative;
  for (const auto& [key, c] : diff.terms()) {
    CoeffDiscrepancy d;
    d.beta = key.second;
    d.k = key.first.part(1);  // lambda = (|b|-k, k)
    d.printed = printed.coeff(key.first, key.second);
    d.normative = normative.coeff(key.first, key.second);
    out.push_back(std::move(d));
  }
  return out;
}

SchurExpansion k_direct_sum(const SchurExpansion& e1, const SchurExpansion& e2) {
  int r1 = e1.r(), r2 = e2.r();
  int n1 = e1.n(), n2 = e2.n();
  SchurExpansion a = e1;
  for (int i = 0; i < r2; ++i) a = rho(a);
  SchurExpansion b = e2;
  for (int i = 0; i < r1; ++i) b = rho(b);
  // relabel b's columns after a's
  SchurExpansion aw(r1 + r2, n1 + n2);
  for (const auto& [key, c] : a.terms()) {
    ExpVec t(key.second);
    t.resize(n1 + n2, 0);
    aw.add_term(key.first, t, c);
  }
  SchurExpansion bw(r1 + r2, n1 + n2);
  for (const auto& [key, c] : b.terms()) {
    ExpVec t(n1 + n2, 0);
    for (int j = 0; j < n2; ++j) t[n1 + j] = key.second[j];
    bw.add_term(key.first, t, c);
  }
  return schur_product(aw, bw);
}

SchurExpansion k_stabilize(const SchurExpansion& e) { return rho(e); }

SchurExpansion hilbert_coefficient(const SchurExpansion& e, const ExpVec& beta) {
  int r = e.r(), n = e.n();
  if (static_cast<int>(beta.size()) != n)
    throw Error("arity_mismatch", "beta length mismatch");
  for (int b : beta)
    if (b < 0) throw Error("bad_argument", "beta must be nonnegative");
  LaurentPoly f = e.to_poly() * truncated_geometric_product(r, beta);
  // extract the coefficient of t^beta as a u-polynomial
  const VarShape& sh = f.shape();
  LaurentPoly upart(VarShape{r, 0, false});
  for (const auto& [ev, c] : f.terms()) {
    bool match = true;
    for (int j = 0; j < n; ++j)
      if (ev[sh.t_pos(j + 1)] != beta[j]) { match = false; break; }
    if (!match) continue;
    ExpVec ue(ev.begin(), ev.begin() + r);
    upart.add_term(ue, c);
  }
  return schur_expand(upart, r);
}

namespace {
// the q-coefficient map of the t^beta coefficient of a {0,n,q}-shaped poly
std::map<int, Int> q_slice(const LaurentPoly& f, const ExpVec& beta) {
  const VarShape& sh = f.shape();
  std::map<int, Int> out;
  for (const auto& [e, c] : f.terms()) {
    bool match = true;
    for (int j = 0; j < sh.t_count; ++j)
      if (e[sh.t_pos(j + 1)] != beta[j]) { match = false; break; }
    if (match) out[e[sh.q_pos()]] += c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}
}  // namespace

LaurentPoly hook_enumerator_fakedep(const Matroid& m) {
  int n = m.n();
  VarShape sh{0, n, true};
  // Zhat = Z~(-1/q; -t) = sum_beta (-1)^{rk+|beta|} q^{rk} t^beta
  LaurentPoly zhat(sh);
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int rk = m.rank_of(s);
    int size = std::popcount(s);
    ExpVec e(sh.size(), 0);
    for (int j = 0; j < n; ++j)
      if (s & (1u << j)) e[sh.t_pos(j + 1)] = 1;
    e[sh.q_pos()] = rk;
    zhat.add_term(e, ((rk + size) % 2 == 0) ? 1 : -1);
  }
  // multiply by prod_j (1 - q t_j), reducing mod <t_j^2>
  LaurentPoly out = zhat;
  for (int j = 1; j <= n; ++j) {
    ExpVec qt(sh.size(), 0);
    qt[sh.t_pos(j)] = 1;
    qt[sh.q_pos()] = 1;
    LaurentPoly factor = LaurentPoly::constant(sh, 1);
    factor.add_term(qt, -1);
    LaurentPoly prod = out * factor;
    out = LaurentPoly(sh);
    for (const auto& [e, c] : prod.terms()) {
      bool keep = true;
      for (int jj = 1; jj <= n; ++jj)
        if (e[sh.t_pos(jj)] > 1) { keep = false; break; }
      if (keep) out.add_term(e, c);
    }
  }
  return out;
}

LaurentPoly dep_polynomial_as_printed(const Matroid& m) {
  int n = m.n();
  VarShape sh{0, n, true};
  LaurentPoly out = LaurentPoly::constant(sh, 1);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int rk = m.rank_of(s);
    int size = std::popcount(s);
    if (rk == size) continue;  // independent
    ExpVec e(sh.size(), 0);
    for (int j = 0; j < n; ++j)
      if (s & (1u << j)) e[sh.t_pos(j + 1)] = 1;
    Int sign = (rk % 2 == 0) ? 1 : -1;
    // (-1)^{rk} q^{rk-1} (q+1)
    e[sh.q_pos()] = rk - 1;
    out.add_term(e, sign);
    e[sh.q_pos()] = rk;
    out.add_term(e, sign);
  }
  return out;
}

Int hook_coefficient(const SchurExpansion& e, int k, const ExpVec& beta) {
  int size = std::accumulate(beta.begin(), beta.end(), 0);
  for (int b : beta)
    if (b != 0 && b != 1) throw Error("bad_argument", "beta must be a 0/1 vector");
  if (k < 1 || k > size) return 0;
  return e.coeff(hook_shape(size, k), beta);
}

std::map<int, Int> fakedep_hook_coefficients(const LaurentPoly& fakedep,
                                             const ExpVec& beta) {
  std::map<int, Int> slice = q_slice(fakedep, beta);
  // divide exactly by (q+1): if c(q) = (q+1) h(q) then h is recovered by
  // synthetic division from the top
  std::map<int, Int> h;
  if (slice.empty()) return h;
  int lo = slice.begin()->first, hi = slice.rbegin()->first;
  std::vector<Int> dense(hi - lo + 1, 0);
  for (const auto& [d, c] : slice) dense[d - lo] = c;
  std::vector<Int> quot(dense.size() - 1, 0);
  Int carry = 0;
  for (int d = static_cast<int>(dense.size()) - 1; d >= 1; --d) {
    Int q = dense[d] - carry;  // coefficient of q^{d-1} in h... see below
    quot[d - 1] = q;
    carry = q;
  }
  if (dense[0] != carry)
    throw Error("not_divisible", "FakeDep coefficient not divisible by (q+1)");
  for (size_t d = 0; d < quot.size(); ++d)
    if (quot[d] != 0) h[static_cast<int>(d) + lo + 1] = quot[d];
  // h indexed so that h[k] = coefficient of q^{k-1} in the quotient
  return h;
}

HookReport hook_discrepancy_report(const Matroid& m) {
  HookReport report;
  int n = m.n();
  LaurentPoly fd = hook_enumerator_fakedep(m);
  LaurentPoly dep = dep_polynomial_as_printed(m);
  for (uint32_t s = 0; s < (1u << n); ++s) {
    ExpVec beta(n, 0);
    for (int j = 0; j < n; ++j)
      if (s & (1u << j)) beta[j] = 1;
    std::map<int, Int> fq = q_slice(fd, beta);
    std::map<int, Int> dq = q_slice(dep, beta);
    if (fq != dq) {
      // report per q-power
      std::map<int, std::pair<Int, Int>> merged;
      for (const auto& [d, c] : dq) merged[d].first = c;
      for (const auto& [d, c] : fq) merged[d].second = c;
      for (const auto& [d, pc] : merged)
        if (pc.first != pc.second)
          report.dep_vs_fakedep.push_back({beta, d, pc.first, pc.second});
    }
    if (s == 0) continue;
    int rk = m.rank_of(s);
    int size = std::popcount(s);
    if (rk == size) continue;
    // printed statement: coefficient of hook k = rk+1 is (-1)^k, others 0
    std::map<int, Int> hooks = fakedep_hook_coefficients(fd, beta);
    for (int k = 1; k <= size; ++k) {
      Int printed = (k == rk + 1) ? Int((k % 2 == 0) ? 1 : -1) : Int(0);
      Int normative = hooks.count(k) ? hooks[k] : Int(0);
      if (printed != normative)
        report.printed_vs_fakedep.push_back({beta, k, printed, normative});
    }
  }
  return report;
}

}  // namespace orbitk
