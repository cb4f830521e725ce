#include "orbitk/schur.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace orbitk {

namespace {

// SSYT enumeration: fill the diagram row by row, left to right.  Entries in
// row i lie in [i+1 .. m] by column-strictness, weakly increase along rows,
// strictly increase down columns.
void ssyt_rec(const std::vector<int>& shape, int m, int row, int col,
              std::vector<std::vector<int>>& tab, ExpVec& content,
              LaurentPoly& out, const VarShape& sh) {
  int nrows = static_cast<int>(shape.size());
  if (row == nrows) {
    ExpVec e(sh.size(), 0);
    for (int i = 0; i < m; ++i) e[sh.u_pos(i + 1)] = content[i];
    out.add_term(e, 1);
    return;
  }
  if (col == shape[row]) {
    ssyt_rec(shape, m, row + 1, 0, tab, content, out, sh);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, tab[row][col - 1]);
  if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
  for (int v = lo; v <= m; ++v) {
    tab[row][col] = v;
    content[v - 1]++;
    ssyt_rec(shape, m, row, col + 1, tab, content, out, sh);
    content[v - 1]--;
  }
}

std::map<std::pair<Partition, int>, LaurentPoly> g_schur_memo;
std::mutex g_schur_mutex;

}  // namespace

LaurentPoly schur_poly(const Partition& lambda, int m) {
  VarShape sh{m, 0, false};
  if (lambda.length() > m) return LaurentPoly(sh);
  {
    std::lock_guard<std::mutex> lock(g_schur_mutex);
    auto it = g_schur_memo.find({lambda, m});
    if (it != g_schur_memo.end()) return it->second;
  }
  LaurentPoly out(sh);
  if (lambda.empty()) {
    out = LaurentPoly::constant(sh, 1);
  } else {
    std::vector<std::vector<int>> tab;
    for (int i = 0; i < lambda.length(); ++i)
      tab.emplace_back(lambda.part(i), 0);
    ExpVec content(m, 0);
    ssyt_rec(lambda.parts(), m, 0, 0, tab, content, out, sh);
  }
  std::lock_guard<std::mutex> lock(g_schur_mutex);
  g_schur_memo.emplace(std::make_pair(lambda, m), out);
  return out;
}

Straightened schur_straighten(const std::vector<int>& seq) {
  int m = static_cast<int>(seq.size());
  std::vector<int> expo(m);
  for (int j = 0; j < m; ++j) expo[j] = seq[j] + m - 1 - j;
  // determinant vanishes on repeated exponents
  std::vector<int> sorted(expo);
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  for (int j = 0; j + 1 < m; ++j)
    if (sorted[j] == sorted[j + 1]) return {0, Partition{}};
  if (!sorted.empty() && sorted.back() < 0)
    throw Error("bad_argument", "straightening would need negative parts");
  // sign of the sorting permutation = parity of inversions
  int inversions = 0;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (expo[a] < expo[b]) ++inversions;
  std::vector<int> parts(m);
  for (int j = 0; j < m; ++j) parts[j] = sorted[j] - (m - 1 - j);
  return {(inversions % 2 == 0) ? 1 : -1, Partition(std::move(parts))};
}

namespace {

// Littlewood-Richardson fillings of nu/lambda with content mu, semistandard
// along rows/columns and with the reverse reading word a lattice word.
// Cells are filled row by row, right to left, so the reading word is built
// in order and the ballot condition can be checked incrementally.
struct LrCounter {
  const Partition *lambda, *nu;
  std::vector<int> mu_padded;
  std::vector<std::vector<int>> fill;  // value at (row, col) or 0 inside lambda
  std::vector<int> word_count;         // occurrences of each letter so far
  Int count = 0;

  void run(int row, int col) {
    int nrows = nu->length();
    if (row == nrows) {
      ++count;
      return;
    }
    if (col < lambda->part(row)) {
      run(row + 1, nu->part(row + 1) - 1);
      return;
    }
    int maxv = static_cast<int>(mu_padded.size());
    for (int v = 1; v <= maxv; ++v) {
      if (word_count[v - 1] >= mu_padded[v - 1]) continue;
      // ballot: after placing v, #v must not exceed #(v-1)
      if (v > 1 && word_count[v - 1] + 1 > word_count[v - 2]) continue;
      // weak increase along the row (right neighbour already placed)
      if (col + 1 < nu->part(row) && fill[row][col + 1] < v) continue;
      // strict increase down the column; the cell above constrains only
      // when it lies in the skew shape (not inside lambda)
      if (row > 0 && col >= lambda->part(row - 1) && fill[row - 1][col] >= v)
        continue;
      fill[row][col] = v;
      word_count[v - 1]++;
      run(row, col - 1);
      word_count[v - 1]--;
      fill[row][col] = 0;
    }
  }
};

}  // namespace

Int lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda)) return 0;
  if (mu.empty()) return (lambda == nu) ? 1 : 0;
  LrCounter c;
  c.lambda = &lambda;
  c.nu = &nu;
  c.mu_padded = mu.parts();
  c.fill.resize(nu.length());
  for (int i = 0; i < nu.length(); ++i) c.fill[i].assign(nu.part(i), 0);
  c.word_count.assign(c.mu_padded.size(), 0);
  // mark lambda cells as "0 = inside lambda"; actual constraint handling:
  // a cell above that lies inside lambda imposes no lower bound.
  c.run(0, nu.part(0) - 1);
  return c.count;
}

SchurExpansion SchurExpansion::one(int r, int n) {
  SchurExpansion e(r, n);
  e.add_term(Partition{}, ExpVec(n, 0), 1);
  return e;
}

Int SchurExpansion::coeff(const Partition& lambda, const ExpVec& t) const {
  auto it = terms_.find({lambda, t});
  return it == terms_.end() ? Int(0) : it->second;
}

void SchurExpansion::add_term(const Partition& lambda, const ExpVec& t, const Int& c) {
  if (c == 0) return;
  if (static_cast<int>(t.size()) != n_)
    throw Error("arity_mismatch", "t-exponent length mismatch");
  auto [it, inserted] = terms_.emplace(Key{lambda, t}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurExpansion SchurExpansion::operator-() const {
  SchurExpansion g(r_, n_);
  for (const auto& [k, c] : terms_) g.terms_.emplace(k, -c);
  return g;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& g) {
  if (r_ != g.r_ || n_ != g.n_)
    throw Error("arity_mismatch", "SchurExpansion arity mismatch");
  for (const auto& [k, c] : g.terms_) add_term(k.first, k.second, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& g) {
  if (r_ != g.r_ || n_ != g.n_)
    throw Error("arity_mismatch", "SchurExpansion arity mismatch");
  for (const auto& [k, c] : g.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentPoly SchurExpansion::to_poly() const {
  VarShape sh{r_, n_, false};
  LaurentPoly out(sh);
  for (const auto& [key, c] : terms_) {
    const auto& [lambda, t] = key;
    if (lambda.length() > r_) continue;
    LaurentPoly s = schur_poly(lambda, r_);
    for (const auto& [e, sc] : s.terms()) {
      ExpVec full(sh.size(), 0);
      for (int i = 0; i < r_; ++i) full[i] = e[i];
      for (int j = 0; j < n_; ++j) full[sh.t_pos(j + 1)] = t[j];
      out.add_term(full, c * sc);
    }
  }
  return out;
}

SchurExpansion SchurExpansion::extended_to_n(int n2) const {
  if (n2 < n_) throw Error("arity_mismatch", "cannot shrink t-arity");
  SchurExpansion g(r_, n2);
  for (const auto& [key, c] : terms_) {
    ExpVec t(key.second);
    t.resize(n2, 0);
    g.add_term(key.first, t, c);
  }
  return g;
}

SchurExpansion SchurExpansion::relabel_t(const std::vector<int>& new_index_of_old) const {
  if (static_cast<int>(new_index_of_old.size()) != n_)
    throw Error("arity_mismatch", "relabeling vector length mismatch");
  SchurExpansion g(r_, n_);
  for (const auto& [key, c] : terms_) {
    ExpVec t(n_, 0);
    for (int j = 0; j < n_; ++j) t[new_index_of_old[j] - 1] = key.second[j];
    g.add_term(key.first, t, c);
  }
  return g;
}

SchurExpansion SchurExpansion::truncated_to_r() const {
  SchurExpansion g(r_, n_);
  for (const auto& [key, c] : terms_)
    if (key.first.length() <= r_) g.add_term(key.first, key.second, c);
  return g;
}

bool SchurExpansion::t_square_free() const {
  for (const auto& [key, c] : terms_)
    for (int e : key.second)
      if (e > 1) return false;
  return true;
}

std::string SchurExpansion::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << " * s[";
    for (int i = 0; i < key.first.length(); ++i) {
      if (i) out << ',';
      out << key.first.part(i);
    }
    out << "]";
    for (int j = 0; j < n_; ++j) {
      if (key.second[j] == 0) continue;
      out << " t" << (j + 1);
      if (key.second[j] != 1) out << '^' << key.second[j];
    }
  }
  return out.str();
}

SchurExpansion schur_expand(const LaurentPoly& f, int r) {
  const VarShape& sh = f.shape();
  if (sh.u_count != r) throw Error("arity_mismatch", "u-arity mismatch in schur_expand");
  if (sh.has_q) throw Error("arity_mismatch", "schur_expand does not apply to q");
  int n = sh.t_count;
  // group terms by t-exponent; each u-part must expand in the Schur basis
  std::map<ExpVec, std::map<ExpVec, Int>> groups;
  for (const auto& [e, c] : f.terms()) {
    ExpVec ue(e.begin(), e.begin() + r);
    ExpVec te(e.begin() + r, e.begin() + r + n);
    for (int x : ue)
      if (x < 0) throw Error("not_symmetric", "negative u-exponent in schur_expand");
    groups[te][ue] = c;
  }
  SchurExpansion out(r, n);
  for (auto& [te, upart] : groups) {
    while (!upart.empty()) {
      auto& [lead, c] = *upart.rbegin();
      // leading exponent of a symmetric polynomial is weakly decreasing
      for (size_t i = 0; i + 1 < lead.size(); ++i)
        if (lead[i] < lead[i + 1])
          throw Error("not_symmetric", "polynomial is not symmetric in u");
      Partition lambda{ExpVec(lead)};
      Int coeff = c;
      LaurentPoly s = schur_poly(lambda, r);
      for (const auto& [se, sc] : s.terms()) {
        ExpVec ue(se.begin(), se.begin() + r);
        auto [it, inserted] = upart.emplace(ue, -coeff * sc);
        if (!inserted) {
          it->second -= coeff * sc;
          if (it->second == 0) upart.erase(it);
        }
      }
      out.add_term(lambda, te, coeff);
    }
  }
  return out;
}

SchurExpansion schur_product(const SchurExpansion& a, const SchurExpansion& b) {
  if (a.r() != b.r() || a.n() != b.n())
    throw Error("arity_mismatch", "SchurExpansion arity mismatch");
  int r = a.r(), n = a.n();
  SchurExpansion out(r, n);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      ExpVec t(n);
      for (int j = 0; j < n; ++j) t[j] = ka.second[j] + kb.second[j];
      const Partition& lam = ka.first;
      const Partition& mu = kb.first;
      // products of partitions of bounded length expand over nu in the
      // rectangle lam + mu rows
      std::vector<Partition> nus =
          partitions_of(lam.size() + mu.size(), r);
      for (const auto& nu : nus) {
        Int c = lr_coeff(lam, mu, nu);
        if (c != 0) out.add_term(nu, t, ca * cb * c);
      }
    }
  return out;
}

SchurExpansion omega_transpose(const SchurExpansion& e) {
  SchurExpansion g(e.r(), e.n());
  for (const auto& [key, c] : e.terms())
    g.add_term(key.first.transpose(), key.second, c);
  return g;
}

namespace {
void alphabets_rec(const Partition& nu, const std::vector<int>& sizes, size_t i,
                   const Partition& remaining, std::vector<Partition>& cur, Int coeff,
                   std::map<std::vector<Partition>, Int>& out) {
  if (i + 1 == sizes.size()) {
    if (remaining.length() > sizes[i]) return;
    cur.push_back(remaining);
    out[cur] += coeff;
    cur.pop_back();
    return;
  }
  // remaining = mu_i * (rest), sum over splittings
  for (int k = 0; k <= remaining.size(); ++k) {
    for (const auto& mu : partitions_of(k, sizes[i])) {
      for (const auto& rest : partitions_of(remaining.size() - k)) {
        Int c = lr_coeff(mu, rest, remaining);
        if (c == 0) continue;
        cur.push_back(mu);
        alphabets_rec(nu, sizes, i + 1, rest, cur, coeff * c, out);
        cur.pop_back();
      }
    }
  }
}
}  // namespace

std::map<std::vector<Partition>, Int> schur_over_alphabets(
    const Partition& nu, const std::vector<int>& alphabet_sizes) {
  std::map<std::vector<Partition>, Int> out;
  if (alphabet_sizes.empty()) throw Error("arity_mismatch", "no alphabets");
  std::vector<Partition> cur;
  alphabets_rec(nu, alphabet_sizes, 0, nu, cur, 1, out);
  // drop zero entries (cancellation cannot occur, but keep canonical)
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly demazure(int i, const LaurentPoly& f) {
  const VarShape& sh = f.shape();
  if (i < 1 || i + 1 > sh.t_count)
    throw Error("arity_mismatch", "demazure index out of range");
  LaurentPoly ti = LaurentPoly::t_var(sh, i);
  LaurentPoly tj = LaurentPoly::t_var(sh, i + 1);
  LaurentPoly numer = ti * f - tj * f.swap_t(i);
  return exact_divide(numer, ti - tj);
}

SchurExpansion rho_k(int k, const SchurExpansion& e) {
  if (k < 0) throw Error("bad_argument", "rho_k needs k >= 0");
  SchurExpansion out(e.r() + 1, e.n());
  for (const auto& [key, c] : e.terms()) {
    if (key.first.length() > e.r())
      throw Error("bad_argument", "partition longer than r in rho_k");
    std::vector<int> seq = key.first.padded(e.r());
    seq.push_back(k);
    Straightened s = schur_straighten(seq);
    if (s.sign == 0) continue;
    out.add_term(s.lambda, key.second, Int(s.sign) * c);
  }
  return out;
}

SchurExpansion rho(const SchurExpansion& e) {
  int n = e.n();
  SchurExpansion out(e.r() + 1, n);
  for (int k = 0; k <= n; ++k) {
    SchurExpansion raised = rho_k(k, e);
    if (raised.is_zero()) continue;
    LaurentPoly ek = elementary_symmetric_t(VarShape{0, n, false}, k);
    Int sign = (k % 2 == 0) ? 1 : -1;
    for (const auto& [se, one] : ek.terms()) {
      ExpVec tshift(se.begin(), se.end());
      for (const auto& [key, c] : raised.terms()) {
        ExpVec t(n);
        for (int j = 0; j < n; ++j) t[j] = key.second[j] + tshift[j];
        out.add_term(key.first, t, sign * c);
      }
    }
  }
  return out;
}

SchurExpansion rho_H(int c, const SchurExpansion& e) {
  if (c < 1) throw Error("bad_argument", "rho_H needs c >= 1");
  int r = e.r(), n = e.n();
  // sum over (k_1,...,k_c): e_{k_1}(t)...e_{k_c}(t) rho_{n+c-k_c}...rho_{n+c-k_1}
  SchurExpansion total(r + c, n);
  std::vector<int> ks(c, 0);
  while (true) {
    SchurExpansion cur = e;
    for (int j = 0; j < c; ++j) cur = rho_k(n + c - ks[j], cur);
    if (!cur.is_zero()) {
      LaurentPoly emul = LaurentPoly::constant(VarShape{0, n, false}, 1);
      for (int j = 0; j < c; ++j)
        emul = emul * elementary_symmetric_t(VarShape{0, n, false}, ks[j]);
      for (const auto& [se, mc] : emul.terms()) {
        for (const auto& [key, cc] : cur.terms()) {
          ExpVec t(n);
          for (int j = 0; j < n; ++j) t[j] = key.second[j] + se[j];
          total.add_term(key.first, t, mc * cc);
        }
      }
    }
    int j = c - 1;
    while (j >= 0 && ks[j] == n) --j;
    if (j < 0) break;
    ++ks[j];
    for (int l = j + 1; l < c; ++l) ks[l] = 0;
  }
  // (-1)^{cr} e_{r+c}(u)^{-c}: subtract c from every part
  Int sign = ((c * r) % 2 == 0) ? 1 : -1;
  SchurExpansion out(r + c, n);
  for (const auto& [key, cc] : total.terms()) {
    std::vector<int> parts = key.first.padded(r + c);
    for (int& p : parts) {
      p -= c;
      if (p < 0)
        throw Error("division_failed", "division by e_{r+c} failed: part below c");
    }
    out.add_term(Partition(std::move(parts)), key.second, sign * cc);
  }
  return out;
}

}  // namespace orbitk
