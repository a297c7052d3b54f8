#pragma once

#include "json.hpp"

#include "commkappa/formulas.hpp"
#include "commkappa/group.hpp"
#include "commkappa/partitions.hpp"
#include "commkappa/treecount.hpp"

namespace commkappa {

using nlohmann::json;

/// GroupSpec: {"family": name, "params": {...}} (direct_product takes
/// "factors": [spec, ...]) or {"generators": [...], "field": {"p", "n"},
/// "points": d, "name": s}. Generators are cycle strings such as "(0 1)(2 3)"
/// or square matrices [[a, b], [c, d]] over the given field. Schema problems
/// throw ParseError with a JSON-pointer location; construction failures keep
/// their own kind.
GroupTable group_from_json(const json& spec);
FamilySpec family_from_json(const json& spec, const std::string& where = "");

json to_json(const GroupProfile& p, const GroupTable& g);
json to_json(const KappaResult& r);
json to_json(const PartitionCertificate& c);
/// Throws ParseError.
PartitionCertificate certificate_from_json(const json& j);
json to_json(const LedgerEntry& e);
json to_json(const Factorization& f);

}  // namespace commkappa
