#pragma once

#include <string>

#include <json.hpp>

#include "focklab/criteria.hpp"
#include "focklab/sequence.hpp"

namespace focklab {

inline constexpr const char* kToolVersion = "0.1.0";

/// Log-domain values serialize in nats with 17 significant digits, enough to
/// round-trip a double exactly.
std::string format_g17(double x);

/// Sequence-spec JSON: {beta, count, deltas, thetas} where deltas/thetas are
/// either explicit arrays or generators
///   {"kind":"constant","value":v}
///   {"kind":"linear","coeff":c}        -> c (1+n)
///   {"kind":"power","coeff":c,"exponent":e} -> c (1+n)^e.
/// Errors name the offending field.
SequenceSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const SequenceSpec& spec);

SequenceSpec spec_from_file(const std::string& path);

nlohmann::json criterion_report_to_json(const CriterionReport& rep);

/// Header embedded in every report: tool version, full config, and the
/// golden constants consumed by the run.
nlohmann::json report_header(const std::string& command, const nlohmann::json& config,
                             unsigned long long seed);

}  // namespace focklab
