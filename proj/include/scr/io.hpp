#pragma once

#include <string>

#include <json.hpp>

#include "scr/algebra.hpp"
#include "scr/canonical.hpp"
#include "scr/companions.hpp"
#include "scr/filtration.hpp"
#include "scr/frames.hpp"

namespace scr {

using Json = nlohmann::json;

Json algebra_to_json(const FiniteAlgebra& alg);
// Rejects malformed tables and algebras failing check_class for their tag.
FiniteAlgebra algebra_from_json(const Json& j);

Json frame_to_json(const FiniteFrame& fr);
FiniteFrame frame_from_json(const Json& j);

Json domains_to_json(const DomainSpec& d);
DomainSpec domains_from_json(const Json& j);

// Algebra object plus "domains" and the printed "rule".
Json scr_to_json(const StableCanonicalRule& s);
StableCanonicalRule scr_from_json(const Json& j);

Json valuation_to_json(const Valuation& v);
Json point_valuation_to_json(const PointValuation& v);
Json report_to_json(const CompanionReport& r);
Json filtration_to_json(const FiltrationResult& f);

std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace scr
