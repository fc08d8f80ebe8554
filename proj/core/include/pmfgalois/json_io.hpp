#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "pmfgalois/constructions.hpp"
#include "pmfgalois/galois.hpp"
#include "pmfgalois/pmf.hpp"
#include "pmfgalois/pomonoid.hpp"
#include "pmfgalois/semiring.hpp"
#include "pmfgalois/totality.hpp"
#include "pmfgalois/weight.hpp"

namespace pmfgalois {

using Json = nlohmann::ordered_json;

// Throws ParseError naming the file and byte offset on malformed input.
Json read_json_file(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& origin = "<input>");

Json pmf_to_json(const Pmf& f);
Pmf pmf_from_json(const Json& j);

Json pomonoid_to_json(const FinitePomonoid& m);
// Accepts the table format, or {"cyclic": c} and {"nat": T, "order": "le"} shorthands.
PomonoidPtr pomonoid_from_json(const Json& j);
Json semiring_to_json(const FiniteSemiring& s);
SemiringPtr semiring_from_json(const Json& j);

Json weight_to_json(const Weight& w);
// A string "pomonoid" field is read as a path relative to dir.
Weight weight_from_json(const Json& j, const std::filesystem::path& dir = {});

Json nilsemigroup_to_json(const Nilsemigroup& o);
// Accepts the table format or {"truncated": d}.
Nilsemigroup nilsemigroup_from_json(const Json& j);
Json factor_set_to_json(const Nilsemigroup& o, const FactorSet& s);
// Missing sigma entries default to the group unit; the adjoined unit of Omega is named "e".
FactorSet factor_set_from_json(const Json& j, const Nilsemigroup& o);

Json witness_to_json(const PreservationWitness& w, const Pmf& f, const Weight& wt);
Json report_to_json(const RestrictionReport& r);
Json si_to_json(const SiResult& r, const FinitePomonoid& m);
Json matching_to_json(const MatchingResult& r);

}  // namespace pmfgalois
