// JSON conversions for every report and job type (schema 1).  Serialization
// is deterministic (object keys are emitted sorted) and parse(serialize(x))
// reproduces x exactly, so reports are replayable byte-for-byte.
#pragma once

#include <json.hpp>

#include "popsum/constructions.hpp"
#include "popsum/restricted.hpp"
#include "popsum/search.hpp"

namespace popsum {

inline constexpr int kSchemaVersion = 1;

void to_json(nlohmann::json& j, const WitnessClauses& c);
void from_json(const nlohmann::json& j, WitnessClauses& c);

void to_json(nlohmann::json& j, const WitnessReport& r);
void from_json(const nlohmann::json& j, WitnessReport& r);

void to_json(nlohmann::json& j, const NoWitness& r);
void from_json(const nlohmann::json& j, NoWitness& r);

void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);

void to_json(nlohmann::json& j, const MainPropItem& r);
void from_json(const nlohmann::json& j, MainPropItem& r);

void to_json(nlohmann::json& j, const MainPropReport& r);
void from_json(const nlohmann::json& j, MainPropReport& r);

void to_json(nlohmann::json& j, const ConstructionResult& r);
void from_json(const nlohmann::json& j, ConstructionResult& r);

void to_json(nlohmann::json& j, const RestrictedReport& r);
void from_json(const nlohmann::json& j, RestrictedReport& r);

void to_json(nlohmann::json& j, const Finding& r);
void from_json(const nlohmann::json& j, Finding& r);

void to_json(nlohmann::json& j, const ScanJob& r);
void from_json(const nlohmann::json& j, ScanJob& r);

void to_json(nlohmann::json& j, const ScanSummary& r);
void from_json(const nlohmann::json& j, ScanSummary& r);

}  // namespace popsum
