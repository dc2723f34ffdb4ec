#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "originlab/hullgeom.hpp"
#include "originlab/lpbound.hpp"
#include "originlab/montecarlo.hpp"
#include "originlab/sampling.hpp"

namespace originlab {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kConfigSchema = "originlab.experiment/1";
inline constexpr const char* kResultSchema = "originlab.result/1";

/// Rationals travel as strings ("-3/4", "2"); integers are also accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_to_json(const QVector& v);
QVector vector_from_json(const Json& j);

Json spec_to_json(const DistributionSpec& spec);
DistributionSpec spec_from_json(const Json& j);

Json config_to_json(const ExperimentConfig& cfg);
/// Accepts a config object, or a result object carrying one under "config".
ExperimentConfig config_from_json(const Json& j);

/// FNV-1a over the canonical config dump, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

/// Deterministic result document: identical for identical configs,
/// whatever the thread count. Wall-clock time is left out for that reason.
Json result_to_json(const ExperimentResult& res);

Json verdict_to_json(const HullVerdict& v);
Json boundedness_to_json(const BoundednessVerdict& v);
Json enumeration_to_json(const EnumerationResult& e);

}  // namespace originlab
