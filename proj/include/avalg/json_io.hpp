#pragma once

#include <json.hpp>

#include "avalg/classify.hpp"

namespace avalg {

// nlohmann::json keeps object keys sorted, which the determinism contract
// of the reports relies on.
using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json vec_to_json(const VecQ& v);
VecQ vec_from_json(const Json& j);
Json mat_to_json(const MatQ& m);

Json iso_spec_to_json(const IsoSpec& spec);
IsoSpec iso_spec_from_json(const Json& j);
Json alg_spec_to_json(const AlgSpec& spec);
AlgSpec alg_spec_from_json(const Json& j);

Json identity_report_to_json(const IdentityReport& rep);
Json fingerprint_to_json(const Fingerprint& fp);
Json witness_to_json(const IsoWitness& w);
Json classification_to_json(const Classification& c);

}  // namespace avalg
