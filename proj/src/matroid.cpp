#include "orbitk/matroid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace orbitk {

namespace {
int popcount(uint32_t x) { return std::popcount(x); }

std::string set_to_string(uint32_t s, int n) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (s & (1u << i)) {
      if (!first) out << ',';
      first = false;
      out << (i + 1);
    }
  out << '}';
  return out.str();
}
}  // namespace

Matroid Matroid::from_bases(int n, std::vector<uint32_t> bases) {
  if (n < 0 || n > 16) throw Error("bad_matroid", "ground set size out of range");
  if (bases.empty()) throw Error("bad_matroid", "empty basis collection");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  int rank = popcount(bases[0]);
  for (uint32_t b : bases) {
    if (b >= (1u << n)) throw Error("bad_matroid", "basis outside ground set");
    if (popcount(b) != rank)
      throw Error("bad_matroid", "bases of mixed cardinality");
  }
  // exchange axiom on the basis level: for bases B1, B2 and i in B1\B2 there
  // is j in B2\B1 with B1-i+j a basis
  for (uint32_t b1 : bases)
    for (uint32_t b2 : bases) {
      uint32_t only1 = b1 & ~b2;
      for (int i = 0; i < n; ++i) {
        if (!(only1 & (1u << i))) continue;
        bool found = false;
        uint32_t only2 = b2 & ~b1;
        for (int j = 0; j < n && !found; ++j) {
          if (!(only2 & (1u << j))) continue;
          uint32_t cand = (b1 & ~(1u << i)) | (1u << j);
          if (std::binary_search(bases.begin(), bases.end(), cand)) found = true;
        }
        if (!found)
          throw Error("exchange_axiom",
                      "exchange axiom violated for bases " + set_to_string(b1, n) +
                          " and " + set_to_string(b2, n));
      }
    }
  Matroid m;
  m.n_ = n;
  m.rank_ = rank;
  m.bases_ = std::move(bases);
  return m;
}

Matroid Matroid::from_matrix(const RationalMatrix& v) {
  int n = v.cols();
  if (n > 16) throw Error("bad_matroid", "too many columns");
  int rank = v.rank();
  std::vector<uint32_t> bases;
  if (rank == 0) {
    bases.push_back(0);
  } else {
    for (uint32_t s = 0; s < (1u << n); ++s) {
      if (popcount(s) != rank) continue;
      if (v.rank_of_cols(s) == rank) bases.push_back(s);
    }
  }
  Matroid m;
  m.n_ = n;
  m.rank_ = rank;
  m.bases_ = std::move(bases);
  return m;
}

Matroid Matroid::uniform(int r, int n) {
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < (1u << n); ++s)
    if (popcount(s) == r) bases.push_back(s);
  Matroid m;
  m.n_ = n;
  m.rank_ = r;
  m.bases_ = std::move(bases);
  return m;
}

int Matroid::rank_of(uint32_t subset) const {
  int best = 0;
  for (uint32_t b : bases_) best = std::max(best, popcount(b & subset));
  return best;
}

bool Matroid::independent(uint32_t subset) const {
  return rank_of(subset) == popcount(subset);
}

bool Matroid::is_basis(uint32_t subset) const {
  return std::binary_search(bases_.begin(), bases_.end(), subset);
}

bool Matroid::is_loop(int e) const { return rank_of(1u << e) == 0; }

bool Matroid::loopless() const {
  for (int e = 0; e < n_; ++e)
    if (is_loop(e)) return false;
  return true;
}

Matroid Matroid::dual() const {
  uint32_t full = (n_ == 32) ? ~0u : ((1u << n_) - 1);
  std::vector<uint32_t> bases;
  for (uint32_t b : bases_) bases.push_back(full & ~b);
  std::sort(bases.begin(), bases.end());
  Matroid m;
  m.n_ = n_;
  m.rank_ = n_ - rank_;
  m.bases_ = std::move(bases);
  return m;
}

namespace {
// relabel a mask through the sorted elements of J
uint32_t compress_mask(uint32_t s, uint32_t J) {
  uint32_t out = 0;
  int pos = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(J & (1u << i))) continue;
    if (s & (1u << i)) out |= (1u << pos);
    ++pos;
  }
  return out;
}
}  // namespace

Matroid Matroid::restrict_to(uint32_t J) const {
  int rk = rank_of(J);
  std::vector<uint32_t> bases;
  uint32_t sub = J;
  // iterate subsets of J
  for (uint32_t s = J;; s = (s - 1) & J) {
    if (popcount(s) == rk && independent(s)) bases.push_back(compress_mask(s, sub));
    if (s == 0) break;
  }
  std::sort(bases.begin(), bases.end());
  Matroid m;
  m.n_ = popcount(J);
  m.rank_ = rk;
  m.bases_ = std::move(bases);
  return m;
}

Matroid Matroid::contract(uint32_t J) const {
  uint32_t full = (1u << n_) - 1;
  uint32_t rest = full & ~J;
  int rkJ = rank_of(J);
  int rk = rank_ - rkJ;
  std::vector<uint32_t> bases;
  for (uint32_t s = rest;; s = (s - 1) & rest) {
    if (popcount(s) == rk && rank_of(s | J) == rkJ + rk)
      bases.push_back(compress_mask(s, rest));
    if (s == 0) break;
  }
  std::sort(bases.begin(), bases.end());
  Matroid m;
  m.n_ = popcount(rest);
  m.rank_ = rk;
  m.bases_ = std::move(bases);
  return m;
}

Matroid Matroid::delete_elems(uint32_t D) const {
  uint32_t full = (1u << n_) - 1;
  return restrict_to(full & ~D);
}

Matroid Matroid::direct_sum(const Matroid& other) const {
  if (n_ + other.n_ > 16) throw Error("bad_matroid", "direct sum too large");
  std::vector<uint32_t> bases;
  for (uint32_t b1 : bases_)
    for (uint32_t b2 : other.bases_) bases.push_back(b1 | (b2 << n_));
  std::sort(bases.begin(), bases.end());
  Matroid m;
  m.n_ = n_ + other.n_;
  m.rank_ = rank_ + other.rank_;
  m.bases_ = std::move(bases);
  return m;
}

Matroid Matroid::truncate(int k) const {
  if (k < 0 || k > rank_) throw Error("bad_argument", "truncation rank out of range");
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < (1u << n_); ++s)
    if (popcount(s) == k && independent(s)) bases.push_back(s);
  Matroid m;
  m.n_ = n_;
  m.rank_ = k;
  m.bases_ = std::move(bases);
  return m;
}

std::vector<uint32_t> Matroid::connected_components() const {
  // elements are connected when some circuit contains both
  std::vector<int> comp(n_);
  for (int i = 0; i < n_; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (uint32_t c : circuits()) {
    int firstelt = -1;
    for (int i = 0; i < n_; ++i)
      if (c & (1u << i)) {
        if (firstelt < 0)
          firstelt = i;
        else
          comp[find(i)] = find(firstelt);
      }
  }
  std::map<int, uint32_t> groups;
  for (int i = 0; i < n_; ++i) groups[find(i)] |= (1u << i);
  std::vector<uint32_t> out;
  for (auto& [root, mask] : groups) out.push_back(mask);
  std::sort(out.begin(), out.end(),
            [](uint32_t a, uint32_t b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

Partition Matroid::rank_partition() const {
  // k-th partial sum = rank of the k-fold matroid union
  //                  = min_{A \subseteq E} |E \ A| + k rk(A)
  std::vector<int> rk(1u << n_);
  for (uint32_t s = 0; s < (1u << n_); ++s) rk[s] = rank_of(s);
  std::vector<int> partial(1, 0);
  for (int k = 1; k <= n_; ++k) {
    int best = n_;
    for (uint32_t a = 0; a < (1u << n_); ++a)
      best = std::min(best, n_ - popcount(a) + k * rk[a]);
    partial.push_back(best);
  }
  std::vector<int> parts;
  for (size_t k = 1; k < partial.size(); ++k) {
    int d = partial[k] - partial[k - 1];
    if (d == 0) break;
    parts.push_back(d);
  }
  return Partition(std::move(parts));
}

std::vector<uint32_t> Matroid::circuits() const {
  // minimal dependent sets; circuits have size at most rank+1
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < (1u << n_); ++s) {
    int size = popcount(s);
    if (size == 0 || size > rank_ + 1) continue;
    if (independent(s)) continue;
    bool minimal = true;
    for (int i = 0; i < n_ && minimal; ++i)
      if (s & (1u << i))
        if (!independent(s & ~(1u << i))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<uint32_t> Matroid::broken_circuits(const std::vector<int>& order) const {
  std::vector<int> ord(order);
  if (ord.empty()) {
    ord.resize(n_);
    for (int i = 0; i < n_; ++i) ord[i] = i;
  }
  if (static_cast<int>(ord.size()) != n_)
    throw Error("bad_argument", "order vector length mismatch");
  std::vector<uint32_t> out;
  for (uint32_t c : circuits()) {
    int smallest = -1;
    for (int i = 0; i < n_; ++i)
      if (c & (1u << i))
        if (smallest < 0 || ord[i] < ord[smallest]) smallest = i;
    out.push_back(c & ~(1u << smallest));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<uint32_t> Matroid::nbc_sets(const std::vector<int>& order) const {
  std::vector<uint32_t> bcs = broken_circuits(order);
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < (1u << n_); ++s) {
    bool ok = true;
    for (uint32_t bc : bcs)
      if ((s & bc) == bc) { ok = false; break; }
    if (ok) out.push_back(s);
  }
  return out;
}

long Matroid::nbc_bases_of_truncation(int k) const {
  if (k < 0) throw Error("bad_argument", "negative rank");
  if (k > rank_) return 0;
  // nbc bases of the rank-k truncation: independent k-sets B containing no
  // broken circuit of M such that no e before min(B) keeps B+e independent
  // (those B+e are the broken circuits the truncation adds).
  std::vector<uint32_t> bcs = broken_circuits();
  long count = 0;
  for (uint32_t s = 0; s < (1u << n_); ++s) {
    if (popcount(s) != k) continue;
    if (!independent(s)) continue;
    bool ok = true;
    for (uint32_t bc : bcs)
      if ((s & bc) == bc) { ok = false; break; }
    if (!ok) continue;
    int minelt = (s == 0) ? n_ : std::countr_zero(s);
    for (int e = 0; e < minelt && ok; ++e)
      if (independent(s | (1u << e))) ok = false;
    if (ok) ++count;
  }
  return count;
}

namespace {
LaurentPoly tutte_rec(const Matroid& m, std::map<std::vector<uint32_t>, LaurentPoly>& memo) {
  VarShape sh{2, 0, false};  // u1 = x, u2 = y
  if (m.n() == 0) return LaurentPoly::constant(sh, 1);
  auto key = m.bases();
  key.push_back(static_cast<uint32_t>(m.n()) << 16);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  LaurentPoly result(sh);
  int e = m.n() - 1;
  uint32_t emask = 1u << e;
  bool loop = m.rank_of(emask) == 0;
  bool coloop = true;  // element of every basis
  for (uint32_t b : m.bases())
    if (!(b & emask)) { coloop = false; break; }
  if (loop) {
    result = LaurentPoly::u_var(sh, 2) * tutte_rec(m.delete_elems(emask), memo);
  } else if (coloop) {
    result = LaurentPoly::u_var(sh, 1) * tutte_rec(m.contract(emask), memo);
  } else {
    result = tutte_rec(m.delete_elems(emask), memo) + tutte_rec(m.contract(emask), memo);
  }
  memo.emplace(std::move(key), result);
  return result;
}
}  // namespace

LaurentPoly Matroid::tutte() const {
  std::map<std::vector<uint32_t>, LaurentPoly> memo;
  return tutte_rec(*this, memo);
}

LaurentPoly Matroid::multivariate_tutte() const {
  VarShape sh{0, n_, true};
  LaurentPoly out(sh);
  for (uint32_t s = 0; s < (1u << n_); ++s) {
    ExpVec e(sh.size(), 0);
    for (int j = 0; j < n_; ++j)
      if (s & (1u << j)) e[sh.t_pos(j + 1)] = 1;
    e[sh.q_pos()] = -rank_of(s);
    out.add_term(e, 1);
  }
  return out;
}

Partition Matroid::parallelism_partition() const {
  if (rank_ != 2) throw Error("bad_argument", "parallelism partition needs rank 2");
  if (!loopless()) throw Error("bad_argument", "parallelism partition needs a loopless matroid");
  std::vector<int> cls(n_, -1);
  int nc = 0;
  for (int i = 0; i < n_; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = nc;
    for (int j = i + 1; j < n_; ++j)
      if (cls[j] < 0 && rank_of((1u << i) | (1u << j)) == 1) cls[j] = nc;
    ++nc;
  }
  std::vector<int> sizes(nc, 0);
  for (int i = 0; i < n_; ++i) sizes[cls[i]]++;
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  return Partition(std::move(sizes));
}

Matroid Matroid::face_matroid(const std::vector<uint32_t>& flag) const {
  uint32_t full = (1u << n_) - 1;
  uint32_t prev = 0;
  for (uint32_t s : flag) {
    if ((s & full) != s || s == 0 || s == full)
      throw Error("bad_flag", "flag sets must be proper nonempty subsets");
    if ((prev & s) != prev || prev == s)
      throw Error("bad_flag", "flag is not strictly nested");
    prev = s;
  }
  std::vector<uint32_t> bases;
  for (uint32_t b : bases_) {
    bool keep = true;
    for (uint32_t s : flag)
      if (popcount(b & s) != rank_of(s)) { keep = false; break; }
    if (keep) bases.push_back(b);
  }
  Matroid m;
  m.n_ = n_;
  m.rank_ = rank_;
  m.bases_ = std::move(bases);
  return m;
}

std::vector<std::vector<int>> Matroid::polytope_vertices() const {
  std::vector<std::vector<int>> out;
  for (uint32_t b : bases_) {
    std::vector<int> v(n_, 0);
    for (int i = 0; i < n_; ++i)
      if (b & (1u << i)) v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

bool Matroid::polytope_contains(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw Error("bad_argument", "point dimension mismatch");
  Rat total(0);
  for (const Rat& xi : x) {
    if (xi < 0) return false;
    total += xi;
  }
  if (total != rank_) return false;
  for (uint32_t s = 1; s < (1u << n_); ++s) {
    Rat sum(0);
    for (int i = 0; i < n_; ++i)
      if (s & (1u << i)) sum += x[i];
    if (sum > rank_of(s)) return false;
  }
  return true;
}

bool subdivision_check(const Matroid& parent,
                       const std::vector<std::pair<Matroid, int>>& cells,
                       uint64_t seed, int extra_points) {
  int n = parent.n();
  for (const auto& [m, sign] : cells)
    if (m.n() != n || m.rank() != parent.rank())
      throw Error("bad_argument", "subdivision cells of mismatched size");

  auto indicator_ok = [&](const std::vector<Rat>& x) {
    int lhs = parent.polytope_contains(x) ? 1 : 0;
    int rhs = 0;
    for (const auto& [m, sign] : cells) rhs += sign * (m.polytope_contains(x) ? 1 : 0);
    return lhs == rhs;
  };

  // grid {0, 1/2, 1}^n
  std::vector<Rat> levels = {Rat(0), Rat(1, 2), Rat(1)};
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = levels[idx[i]];
    if (!indicator_ok(x)) return false;
    int i = n - 1;
    while (i >= 0 && idx[i] == 2) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = 0;
  }

  // random rational points of the parent polytope: convex combinations of
  // up to four random vertices with small denominators
  std::mt19937_64 rng(seed);
  auto verts = parent.polytope_vertices();
  std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
  std::uniform_int_distribution<int> wdist(0, 6);
  int produced = 0;
  while (produced < extra_points) {
    std::vector<Rat> w(4);
    Rat wsum(0);
    std::vector<size_t> vi(4);
    for (int k = 0; k < 4; ++k) {
      vi[k] = pick(rng);
      w[k] = wdist(rng);
      wsum += w[k];
    }
    if (wsum == 0) continue;
    std::vector<Rat> x(n, Rat(0));
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < n; ++i) x[i] += w[k] * Rat(verts[vi[k]][i]);
    for (int i = 0; i < n; ++i) x[i] /= wsum;
    if (!indicator_ok(x)) return false;
    ++produced;
  }
  return true;
}

}  // namespace orbitk
