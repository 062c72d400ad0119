#pragma once

#include "hlv/structure.hpp"
#include "hlv/symfunc.hpp"

#include <json.hpp>

#include <map>

namespace hlv {

using Json = nlohmann::json;

/// Ascending coefficient list ["num/den", ...].
Json to_json(const TPoly& p);
/// {"num": [...], "den": [...]}.
Json to_json(const TRational& r);
/// [3,1].
Json to_json(const Partition& p);
Json to_json(const Composition& c);
/// {"basis":"p","degree":d,"terms":[{"index":[...],"coeff":{...}}]}.
Json to_json(const SymFunc& f);
/// [{"exponents":[...],"coeff":{...}}].
Json to_json(const MultiPoly& p);
/// {"lambda","mu","nu","offset","samples":[{"m","value"}],"onset","stable","bound"}.
/// onset and stable are null when the scan did not stabilize.
Json to_json(const StabilityReport& report);
/// Partition-keyed coefficient map as [{"index":[...],"coeff":{...}}].
Json to_json(const std::map<Partition, TRational>& coeffs);

// Parsers throw std::invalid_argument (or nlohmann::json::exception) on malformed input.
TPoly tpoly_from_json(const Json& j);
TRational trational_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Composition composition_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);
MultiPoly multipoly_from_json(const Json& j);
StabilityReport stability_report_from_json(const Json& j);

} // namespace hlv
