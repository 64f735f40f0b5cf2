#pragma once

#include <json.hpp>

#include "schurkit/conjugate_engine.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/polynomial.hpp"
#include "schurkit/schur.hpp"
#include "schurkit/tableau.hpp"

namespace schurkit {

using json = nlohmann::ordered_json;

/// Partitions are plain integer arrays.
json to_json(const Partition& p);
Partition partition_from_json(const json& j);

/// Array of rows.
json to_json(const Tableau& t);

/// {"nvars": n, "terms": [{"exponents": [...], "coeff": c}, ...]}, leading
/// term first.
json to_json(const MonomialPolynomial& p);
MonomialPolynomial polynomial_from_json(const json& j);

/// {"terms": [{"partition": [...], "coeff": c}, ...]}, largest partition
/// first.
json to_json(const SchurExpansion& e);
SchurExpansion schur_expansion_from_json(const json& j);

/// {passed, violations: [{id, point, bindings, message}],
///  variants: {outer, inner, for}, writes, completed, checks[, trace]}
json to_json(const ContractReport& r);

}  // namespace schurkit
