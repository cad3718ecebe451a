#pragma once

// JSON renderings of library results for the command-line envelope.

#include <json.hpp>

#include "polycx/audit.hpp"
#include "polycx/catalog.hpp"
#include "polycx/coset.hpp"
#include "polycx/flag_aut.hpp"

namespace polycx::cli {

using nlohmann::json;

json to_json(const Vec3& v);
json to_json(const Isometry& g);
json to_json(const Violation& v, const ValidationReport& r);
json violations_json(const ValidationReport& r);
json to_json(const SystemCheck& c);
json to_json(const Check& c);
json to_json(const EntryVerification& v);
json to_json(const AuditReport& r);
json to_json(const Rank5Result& r);
json flag_json(const IncidenceComplex& c, const Flag& f);

}  // namespace polycx::cli
