#pragma once

#include <json.hpp>

#include "classify.hpp"

namespace qpair {

using json = nlohmann::ordered_json;

json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

/// {"format_version": 1, "quaternionic_dimension": k, "subspace_basis": [...]}
/// Always re-serializes the normalized basis.
json pair_to_json(const Pair& p);
Pair pair_from_json(const json& j);

json torsion_orbit_to_json(const TorsionOrbit& o);
TorsionOrbit torsion_orbit_from_json(const json& j);

json signature_to_json(const SheafSignature& s);
SheafSignature signature_from_json(const json& j, long k, long dim_u);

json factors_to_json(const FactorSignature& f);

json filtration_to_json(const Filtration& f);

/// Full classification report (stable, versioned).
json report_to_json(const Pair& p, const Classification& cls, const Filtration* filtration);

json pencil_debug_json(const Pencil& p);  // golden tests only, not a stable format

std::string dump_canonical(const json& j, bool pretty);

/// Parse with domain_error on syntax errors.
json parse_json(const std::string& text);

}  // namespace qpair
