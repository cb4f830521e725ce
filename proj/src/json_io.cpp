#include "orbitk/json_io.hpp"

namespace orbitk {

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (int x : p.parts()) out.push_back(x);
  return out;
}

Partition partition_from_json(const json& j) {
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(x.get<int>());
  return Partition(std::move(parts));
}

json schur_to_json(const SchurExpansion& e) {
  json out = json::array();
  for (const auto& [key, c] : e.terms()) {
    json term;
    term["lambda"] = partition_to_json(key.first);
    term["t"] = key.second;
    term["coeff"] = c.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

json laurent_to_json(const LaurentPoly& f) {
  const VarShape& sh = f.shape();
  json out = json::array();
  for (const auto& [e, c] : f.terms()) {
    json term;
    if (sh.u_count > 0)
      term["u"] = std::vector<int>(e.begin(), e.begin() + sh.u_count);
    if (sh.t_count > 0)
      term["t"] = std::vector<int>(e.begin() + sh.u_count,
                                   e.begin() + sh.u_count + sh.t_count);
    if (sh.has_q) term["q"] = e[sh.q_pos()];
    term["coeff"] = c.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (uint32_t b : m.bases()) {
    json basis = json::array();
    for (int i = 0; i < m.n(); ++i)
      if (b & (1u << i)) basis.push_back(i + 1);
    bases.push_back(std::move(basis));
  }
  return json{{"n", m.n()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<uint32_t> bases;
  for (const auto& basis : j.at("bases")) {
    uint32_t mask = 0;
    for (const auto& e : basis) {
      int i = e.get<int>();
      if (i < 1 || i > n) throw Error("parse", "basis element out of range");
      mask |= (1u << (i - 1));
    }
    bases.push_back(mask);
  }
  Matroid m = Matroid::from_bases(n, std::move(bases));
  if (j.contains("rank") && j.at("rank").get<int>() != m.rank())
    throw Error("parse", "declared rank disagrees with the bases");
  return m;
}

json matrix_to_json(const RationalMatrix& v) {
  json rows = json::array();
  for (int i = 0; i < v.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < v.cols(); ++j) row.push_back(rat_to_string(v.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", v.rows()}, {"cols", v.cols()}, {"entries", rows}};
}

RationalMatrix matrix_from_json(const json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  RationalMatrix v(rows, cols);
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows)
    throw Error("parse", "entry rows mismatch");
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[i].size()) != cols)
      throw Error("parse", "entry cols mismatch");
    for (int c = 0; c < cols; ++c)
      v.at(i, c) = rat_from_string(entries[i][c].get<std::string>());
  }
  return v;
}

json discrepancies_to_json(const std::vector<CoeffDiscrepancy>& ds) {
  json out = json::array();
  for (const auto& d : ds) {
    out.push_back(json{{"beta", d.beta},
                       {"k", d.k},
                       {"printed", d.printed.get_str()},
                       {"normative", d.normative.get_str()}});
  }
  return out;
}

}  // namespace orbitk
