#pragma once

#include <json.hpp>

#include "orbitk/groebner.hpp"
#include "orbitk/kclass.hpp"
#include "orbitk/matroid.hpp"
#include "orbitk/ratmat.hpp"
#include "orbitk/schur.hpp"

namespace orbitk {

using nlohmann::json;

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// [{"lambda": [...], "t": [...], "coeff": "<big int>"}, ...]
json schur_to_json(const SchurExpansion& e);

/// Term list with explicit exponent blocks:
/// [{"u": [...], "t": [...], "q": k, "coeff": "..."}] (blocks present per shape).
json laurent_to_json(const LaurentPoly& f);

/// {"n": 4, "rank": 2, "bases": [[1,2], ...]} -- 1-indexed.
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

/// {"rows": 2, "cols": 4, "entries": [["1","0","1","1"], ...]}, rationals
/// as strings "p/q".
json matrix_to_json(const RationalMatrix& v);
RationalMatrix matrix_from_json(const json& j);

json discrepancies_to_json(const std::vector<CoeffDiscrepancy>& ds);

}  // namespace orbitk
