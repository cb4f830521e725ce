#include "orbitk/tensor.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace orbitk {

SchurExpansion char_uniform_rank2(int n) {
  if (n < 2) throw Error("bad_argument", "need n >= 2");
  SchurExpansion out(2, 0);
  ExpVec none;
  out.add_term(Partition{n}, none, 1);
  for (int l = 1; 2 * l <= n; ++l)
    out.add_term(Partition{n - l, l}, none, n - 2 * l + 1);
  return out;
}

SchurExpansion char_rank2(const Partition& mu) {
  if (mu.length() < 2) throw Error("bad_argument", "rank 2 needs >= 2 parallel classes");
  int n = mu.size();
  Partition muT = mu.transpose();
  SchurExpansion out(2, 0);
  ExpVec none;
  out.add_term(Partition{n}, none, 1);
  for (int k = 1; 2 * k <= n; ++k) {
    int s = 0;
    for (int i = 0; i < k; ++i) s += muT.part(i);
    int mult = std::max(s - 2 * k + 1, 0);
    if (mult > 0) out.add_term(Partition{n - k, k}, none, mult);
  }
  return out;
}

long hook_multiplicity_nbc(const Matroid& m, int k) {
  if (!m.loopless()) throw Error("bad_argument", "loops present");
  if (k < 1) throw Error("bad_argument", "need k >= 1");
  if (k > m.rank()) return 0;
  return m.nbc_bases_of_truncation(k);
}

std::pair<LaurentPoly, LaurentPoly> hook_generating_identity(const Matroid& m) {
  if (!m.loopless()) throw Error("bad_argument", "loops present");
  VarShape sh{0, 0, true};
  LaurentPoly lhs(sh);
  for (int k = 0; k <= m.rank(); ++k) {
    long mult = (k == 0) ? 1 : hook_multiplicity_nbc(m, k);
    if (mult == 0) continue;
    // q^{k-1}(q+1)
    ExpVec e(1, k - 1);
    lhs.add_term(e, mult);
    e[0] = k;
    lhs.add_term(e, mult);
  }
  // rhs: q^{rk} T(1+1/q, 0) expanded exactly
  LaurentPoly tutte = m.tutte();  // u1 = x, u2 = y
  LaurentPoly rhs(sh);
  const VarShape& ts = tutte.shape();
  for (const auto& [e, c] : tutte.terms()) {
    int xdeg = e[ts.u_pos(1)], ydeg = e[ts.u_pos(2)];
    if (ydeg > 0) continue;  // y = 0
    // x^xdeg -> (1+1/q)^xdeg, times q^{rk}
    for (int i = 0; i <= xdeg; ++i) {
      // binomial(xdeg, i) q^{-i}
      Int binom = 1;
      for (int a = 0; a < i; ++a) binom = binom * (xdeg - a) / (a + 1);
      ExpVec qe(1, m.rank() - i);
      rhs.add_term(qe, c * binom);
    }
  }
  return {lhs, rhs};
}

bool support_test(const Matroid& m, const Partition& mu) {
  if (!m.loopless()) throw Error("bad_argument", "loops present");
  if (mu.size() != m.n()) throw Error("size_mismatch", "|mu| must equal n");
  return dominance_geq(mu, m.rank_partition().transpose());
}

namespace {

// insertion of a vector into a row-reduced basis; returns the residual's
// coefficients against the basis when fully reducible (coeffs empty
// otherwise and the residual is appended)
struct EchelonBasis {
  std::vector<std::vector<Rat>> rows;
  std::vector<int> lead;  // leading column per row

  // reduce v in place, returning the coefficients of the basis rows used
  std::vector<Rat> reduce(std::vector<Rat>& v) const {
    std::vector<Rat> coeffs(rows.size(), Rat(0));
    for (size_t i = 0; i < rows.size(); ++i) {
      const Rat& piv = v[lead[i]];
      if (piv == 0) continue;
      Rat f = piv;  // basis rows are normalized with leading 1
      coeffs[i] = f;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
    }
    return coeffs;
  }

  bool insert(std::vector<Rat> v) {
    reduce(v);
    int l = -1;
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) { l = static_cast<int>(j); break; }
    if (l < 0) return false;
    Rat inv = v[l];
    for (auto& x : v) x /= inv;
    // keep earlier rows fully reduced against the new one
    for (size_t i = 0; i < rows.size(); ++i) {
      Rat f = rows[i][l];
      if (f == 0) continue;
      for (size_t j = 0; j < v.size(); ++j) rows[i][j] -= f * v[j];
    }
    rows.push_back(std::move(v));
    lead.push_back(l);
    // maintain sorted-by-lead order
    for (size_t i = rows.size(); i-- > 1;) {
      if (lead[i - 1] <= lead[i]) break;
      std::swap(lead[i - 1], lead[i]);
      std::swap(rows[i - 1], rows[i]);
    }
    return true;
  }
};

long ipow(int b, int e) {
  long v = 1;
  while (e--) v *= b;
  return v;
}

// index of e_{a_1} (x) ... (x) e_{a_n} with digits a_i in [0, r)
long tensor_index(const std::vector<int>& digits, int r) {
  long idx = 0;
  for (int d : digits) idx = idx * r + d;
  return idx;
}

// place permutation: position i of sigma.w receives factor sigma^{-1}(i)
std::vector<Rat> permute_tensor(const std::vector<Rat>& w, const std::vector<int>& sigma,
                                int n, int r) {
  std::vector<Rat> out(w.size(), Rat(0));
  std::vector<int> digits(n);
  for (long idx = 0; idx < static_cast<long>(w.size()); ++idx) {
    if (w[idx] == 0) continue;
    long rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rest % r);
      rest /= r;
    }
    std::vector<int> moved(n);
    for (int i = 0; i < n; ++i) moved[sigma[i] - 1] = digits[i];
    out[tensor_index(moved, r)] += w[idx];
  }
  return out;
}

std::vector<int> cycle_type_rep(const Partition& cls, int n) {
  // permutation with cycles (1..c1)(c1+1..c1+c2)...
  std::vector<int> sigma(n);
  int start = 0;
  for (int i = 0; i < cls.length(); ++i) {
    int len = cls.part(i);
    for (int j = 0; j < len; ++j)
      sigma[start + j] = start + 1 + ((j + 1) % len);
    start += len;
  }
  return sigma;
}

}  // namespace

SnModule schur_weyl_module(const RationalMatrix& v) {
  int r = v.rows(), n = v.cols();
  if (n > 7) throw Error("resource_cap", "Schur-Weyl oracle limited to n <= 7");
  long dim = ipow(r, n);

  // generating tensor v_1 (x) ... (x) v_n
  std::vector<Rat> gen(dim, Rat(0));
  std::vector<int> digits(n, 0);
  while (true) {
    Rat c(1);
    for (int i = 0; i < n; ++i) c *= v.at(digits[i], i);
    if (c != 0) gen[tensor_index(digits, r)] += c;
    int i = n - 1;
    while (i >= 0 && digits[i] == r - 1) --i;
    if (i < 0) break;
    ++digits[i];
    for (int j = i + 1; j < n; ++j) digits[j] = 0;
  }

  EchelonBasis basis;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    basis.insert(permute_tensor(gen, sigma, n, r));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  SnModule mod;
  mod.n = n;
  mod.r = r;
  mod.basis = basis.rows;

  // traces of class representatives on the module
  for (const Partition& cls : partitions_of(n)) {
    std::vector<int> rep = cycle_type_rep(cls, n);
    Rat tr(0);
    for (size_t i = 0; i < basis.rows.size(); ++i) {
      std::vector<Rat> img = permute_tensor(basis.rows[i], rep, n, r);
      std::vector<Rat> coeffs = basis.reduce(img);
      for (const Rat& x : img)
        if (x != 0)
          throw Error("not_invariant", "module basis is not permutation-stable");
      tr += coeffs[i];
    }
    mod.class_traces.emplace(cls, tr);
  }
  return mod;
}

namespace {
std::map<std::pair<Partition, Partition>, Int> g_mn_memo;
std::mutex g_mn_mutex;

// border strips of size `len` whose removal leaves a partition
Int mn_rec(const Partition& lambda, const Partition& cls);

Int mn_sum_over_strips(const Partition& lambda, int len, const Partition& rest) {
  // remove a border strip of size len from lambda: characterized by the
  // pair (start row a, end row b) with the strip occupying columns
  // lambda_b .. lambda_a - 1 going up; validity via the standard
  // first-column hook encoding
  Int total = 0;
  int rows = lambda.length();
  for (int a = 0; a < rows; ++a)
    for (int b = a; b < rows; ++b) {
      // after removal: lambda'_i = lambda_{i+1} - 1 for a <= i < b,
      // lambda'_b = lambda_a - len + (b - a); others unchanged
      std::vector<int> parts = lambda.parts();
      std::vector<int> np(parts);
      for (int i = a; i < b; ++i) np[i] = parts[i + 1] - 1;
      np[b] = parts[a] - len + (b - a);
      if (np[b] < 0) continue;
      bool ok = true;
      for (size_t i = 0; i + 1 < np.size(); ++i)
        if (np[i] < np[i + 1]) { ok = false; break; }
      if (!ok) continue;
      // the strip must be a genuine border strip: its cells are the skew
      // shape lambda / np and must be connected of size len with height b-a;
      // the encoding above guarantees it exactly when np is a partition and
      // np[b] <= parts[b] and columns overlap consecutively
      int removed = 0;
      for (int i = 0; i < rows; ++i) removed += parts[i] - np[i];
      if (removed != len) continue;
      if (np[b] > parts[b]) continue;
      // connectivity along rows is forced by the encoding: the strip in
      // row i < b spans [parts[i+1]-1, parts[i]-1] and meets row i+1 in
      // column parts[i+1]-1
      int height = b - a;
      Int sign = (height % 2 == 0) ? 1 : -1;
      Partition next{std::vector<int>(np)};
      total += sign * mn_rec(next, rest);
    }
  return total;
}

Int mn_rec(const Partition& lambda, const Partition& cls) {
  if (lambda.size() != cls.size())
    throw Error("size_mismatch", "character arguments of unequal size");
  if (lambda.empty()) return 1;
  {
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    auto it = g_mn_memo.find({lambda, cls});
    if (it != g_mn_memo.end()) return it->second;
  }
  int len = cls.part(0);
  std::vector<int> restparts(cls.parts().begin() + 1, cls.parts().end());
  Partition rest{std::move(restparts)};
  Int val = mn_sum_over_strips(lambda, len, rest);
  std::lock_guard<std::mutex> lock(g_mn_mutex);
  g_mn_memo.emplace(std::make_pair(lambda, cls), val);
  return val;
}
}  // namespace

Int mn_character(const Partition& lambda, const Partition& cls) {
  return mn_rec(lambda, cls);
}

Int specht_dimension(const Partition& lambda) {
  int n = lambda.size();
  std::vector<int> ident(n, 1);
  return mn_character(lambda, Partition{std::move(ident)});
}

Int conjugacy_class_size(const Partition& cls) {
  int n = cls.size();
  Int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  // centralizer order z = prod k^{m_k} m_k!
  Int z = 1;
  std::map<int, int> mult;
  for (int i = 0; i < cls.length(); ++i) mult[cls.part(i)]++;
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return fact / z;
}

std::map<Partition, Int> sn_multiplicities(const SnModule& mod) {
  int n = mod.n;
  Int fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::map<Partition, Int> out;
  for (const Partition& lambda : partitions_of(n)) {
    Rat sum(0);
    for (const auto& [cls, tr] : mod.class_traces)
      sum += Rat(conjugacy_class_size(cls) * mn_character(lambda, cls)) * tr;
    Rat m = sum / Rat(fact);
    if (m.get_den() != 1)
      throw Error("not_integral", "non-integer multiplicity (oracle bug)");
    Int mi(m.get_num());
    if (mi < 0) throw Error("not_integral", "negative multiplicity (oracle bug)");
    if (mi != 0) out.emplace(lambda, mi);
  }
  return out;
}

}  // namespace orbitk
