#include "orbitk/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitk {

namespace {
void check_same_shape(const LaurentPoly& f, const LaurentPoly& g) {
  if (!(f.shape() == g.shape()))
    throw Error("arity_mismatch", "polynomials have different variable arity");
}
}  // namespace

LaurentPoly LaurentPoly::constant(VarShape shape, Int c) {
  LaurentPoly f(shape);
  f.add_term(ExpVec(shape.size(), 0), c);
  return f;
}

LaurentPoly LaurentPoly::monomial(VarShape shape, const ExpVec& e, Int c) {
  if (static_cast<int>(e.size()) != shape.size())
    throw Error("arity_mismatch", "exponent vector length mismatch");
  LaurentPoly f(shape);
  f.add_term(e, c);
  return f;
}

LaurentPoly LaurentPoly::u_var(VarShape shape, int i) {
  ExpVec e(shape.size(), 0);
  e[shape.u_pos(i)] = 1;
  return monomial(shape, e);
}

LaurentPoly LaurentPoly::t_var(VarShape shape, int j) {
  ExpVec e(shape.size(), 0);
  e[shape.t_pos(j)] = 1;
  return monomial(shape, e);
}

LaurentPoly LaurentPoly::q_var(VarShape shape) {
  if (!shape.has_q) throw Error("arity_mismatch", "shape has no q variable");
  ExpVec e(shape.size(), 0);
  e[shape.q_pos()] = 1;
  return monomial(shape, e);
}

Int LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

Int LaurentPoly::constant_coeff() const {
  return coeff(ExpVec(shape_.size(), 0));
}

void LaurentPoly::add_term(const ExpVec& e, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly g(shape_);
  for (const auto& [e, c] : terms_) g.terms_.emplace(e, -c);
  return g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  check_same_shape(*this, g);
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  check_same_shape(*this, g);
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_shape(f, g);
  LaurentPoly h(f.shape());
  ExpVec e(f.shape().size());
  for (const auto& [ef, cf] : f.terms_)
    for (const auto& [eg, cg] : g.terms_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ef[k] + eg[k];
      h.add_term(e, cf * cg);
    }
  return h;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& f) {
  LaurentPoly h(f.shape());
  if (c == 0) return h;
  for (const auto& [e, cf] : f.terms_) h.terms_.emplace(e, c * cf);
  return h;
}

bool LaurentPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

int LaurentPoly::min_total_degree() const {
  if (is_zero()) throw Error("empty", "degree of zero polynomial");
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

int LaurentPoly::max_total_degree() const {
  if (is_zero()) throw Error("empty", "degree of zero polynomial");
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

LaurentPoly LaurentPoly::total_degree_part(int d) const {
  LaurentPoly g(shape_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) g.terms_.emplace(e, c);
  return g;
}

LaurentPoly LaurentPoly::swap_t(int i) const {
  LaurentPoly g(shape_);
  int a = shape_.t_pos(i), b = shape_.t_pos(i + 1);
  for (const auto& [e, c] : terms_) {
    ExpVec f(e);
    std::swap(f[a], f[b]);
    g.add_term(f, c);
  }
  return g;
}

LaurentPoly LaurentPoly::relabel_t(const std::vector<int>& new_index_of_old) const {
  if (static_cast<int>(new_index_of_old.size()) != shape_.t_count)
    throw Error("arity_mismatch", "relabeling vector length mismatch");
  LaurentPoly g(shape_);
  for (const auto& [e, c] : terms_) {
    ExpVec f(e);
    for (int j = 0; j < shape_.t_count; ++j)
      f[shape_.t_pos(new_index_of_old[j])] = e[shape_.t_pos(j + 1)];
    g.add_term(f, c);
  }
  return g;
}

std::string LaurentPoly::to_string() const {
  std::vector<std::string> names;
  for (int i = 1; i <= shape_.u_count; ++i) names.push_back("u" + std::to_string(i));
  for (int j = 1; j <= shape_.t_count; ++j) names.push_back("t" + std::to_string(j));
  if (shape_.has_q) names.push_back("q");
  return to_string(names);
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (!any_var) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << " * ";
    bool first_var = true;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!first_var) out << ' ';
      first_var = false;
      out << names.at(k);
      if (e[k] != 1) out << '^' << e[k];
    }
  }
  return out.str();
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_shape(f, g);
  if (g.is_zero()) throw Error("division_by_zero", "exact_divide by zero");
  if (f.is_zero()) return LaurentPoly(g.shape());

  // Reduce to the polynomial case by factoring out the componentwise
  // minimal exponent of each operand.
  int m = f.shape().size();
  ExpVec fmin(m), gmin(m);
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    for (int k = 0; k < m; ++k) fmin[k] = first ? e[k] : std::min(fmin[k], e[k]);
    first = false;
  }
  first = true;
  for (const auto& [e, c] : g.terms()) {
    for (int k = 0; k < m; ++k) gmin[k] = first ? e[k] : std::min(gmin[k], e[k]);
    first = false;
  }

  std::map<ExpVec, Int> rem;
  for (const auto& [e, c] : f.terms()) {
    ExpVec s(e);
    for (int k = 0; k < m; ++k) s[k] -= fmin[k];
    rem.emplace(s, c);
  }
  std::map<ExpVec, Int> div;
  for (const auto& [e, c] : g.terms()) {
    ExpVec s(e);
    for (int k = 0; k < m; ++k) s[k] -= gmin[k];
    div.emplace(s, c);
  }

  const auto& [glead, gc] = *div.rbegin();
  LaurentPoly q(f.shape());
  ExpVec shift(m);
  while (!rem.empty()) {
    const auto& [flead, fc] = *rem.rbegin();
    ExpVec qe(m);
    for (int k = 0; k < m; ++k) {
      qe[k] = flead[k] - glead[k];
      if (qe[k] < 0) throw Error("not_divisible", "no polynomial quotient exists");
    }
    Int qc = fc / gc;
    if (qc * gc != fc) throw Error("not_divisible", "no polynomial quotient exists");
    for (int k = 0; k < m; ++k) shift[k] = qe[k] + fmin[k] - gmin[k];
    q.add_term(shift, qc);
    for (const auto& [e, c] : div) {
      ExpVec s(m);
      for (int k = 0; k < m; ++k) s[k] = e[k] + qe[k];
      auto [it, inserted] = rem.emplace(s, -qc * c);
      if (!inserted) {
        it->second -= qc * c;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return q;
}

LaurentPoly substitute_affine(const LaurentPoly& f) {
  if (f.has_negative_exponents())
    throw Error("negative_exponent", "substitute_affine requires a polynomial");
  const VarShape& sh = f.shape();
  LaurentPoly out(sh);
  // expansion of (1-v)^e per variable, multiplied across the monomial
  for (const auto& [e, c] : f.terms()) {
    if (sh.has_q && e[sh.q_pos()] != 0)
      throw Error("arity_mismatch", "substitute_affine does not apply to q");
    LaurentPoly term = LaurentPoly::constant(sh, c);
    for (int k = 0; k < sh.u_count + sh.t_count; ++k) {
      for (int rep = 0; rep < e[k]; ++rep) {
        ExpVec v(sh.size(), 0);
        v[k] = 1;
        LaurentPoly one_minus = LaurentPoly::constant(sh, 1);
        one_minus.add_term(v, -1);
        term = term * one_minus;
      }
    }
    out += term;
  }
  return out;
}

LaurentPoly truncated_geometric_product(int r, const ExpVec& bound) {
  int n = static_cast<int>(bound.size());
  for (int b : bound)
    if (b < 0) throw Error("negative_exponent", "negative truncation bound");
  VarShape sh{r, n, false};
  LaurentPoly prod = LaurentPoly::constant(sh, 1);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= n; ++j) {
      LaurentPoly factor(sh);
      for (int d = 0; d <= bound[j - 1]; ++d) {
        ExpVec e(sh.size(), 0);
        e[sh.u_pos(i)] = d;
        e[sh.t_pos(j)] = d;
        factor.add_term(e, 1);
      }
      prod = prod * factor;
      // drop anything already past the requested t-degrees
      LaurentPoly trimmed(sh);
      for (const auto& [e, c] : prod.terms()) {
        bool keep = true;
        for (int jj = 1; jj <= n; ++jj)
          if (e[sh.t_pos(jj)] > bound[jj - 1]) keep = false;
        if (keep) trimmed.add_term(e, c);
      }
      prod = trimmed;
    }
  return prod;
}

LaurentPoly elementary_symmetric_t(VarShape shape, int k) {
  LaurentPoly out(shape);
  int n = shape.t_count;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  // iterate over k-subsets of [n]
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ExpVec e(shape.size(), 0);
    for (int i : idx) e[shape.t_pos(i + 1)] = 1;
    out.add_term(e, 1);
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace orbitk
