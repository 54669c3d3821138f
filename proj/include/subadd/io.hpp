#pragma once

// JSON file formats. Rationals are strings "p/q" (or "p"). Every parse
// failure is Error{ParseError} naming the source and the offending field.

#include <string>
#include <vector>

#include "json.hpp"
#include "subadd/antinefseq.hpp"
#include "subadd/model.hpp"
#include "subadd/toric.hpp"

namespace subadd::io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors report line and column.
Json parse_json(const std::string& text, const std::string& source);
Json load_json(const std::string& path);

// Model files: {base_curves: [{name, self_intersection, kind}],
// base_edges: [[a, b]], blowups: [{name, center_on: [..]}]}.
// kind is "exceptional" (default) or "marked".
surface::ModelDescription model_from_json(const Json& j, const std::string& source);
Json model_to_json(const surface::ModelDescription& desc);

// Cycle files: {curve name: "p/q"}; absent curves are zero.
surface::QCycle cycle_from_json(const surface::ResolutionModel& model, const Json& j, const std::string& source);
Json cycle_to_json(const surface::ResolutionModel& model, const surface::QCycle& z);
Json cycle_to_json(const surface::ResolutionModel& model, const surface::Cycle& z);

// Ring files: {rank, congruences: [{weights: [..], modulus}]}.
toric::ToricRing ring_from_json(const Json& j, const std::string& source);
Json ring_to_json(const toric::ToricRing& ring);

// Ideal files: {generators: [[..], ..]}.
toric::MonomialIdeal ideal_from_json(const toric::ToricRing& ring, const Json& j, const std::string& source);
Json generators_to_json(const std::vector<toric::Exponent>& gens);

Json to_json(const surface::ResolutionModel& model, const antinefseq::SubadditivityCertificate& cert);
Json to_json(const antinefseq::StrongSubaddReport& report);
Json to_json(const toric::MonomialCertificate& cert);
Json to_json(const toric::ExploreReport& report);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace subadd::io
