#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ghgen/distance.hpp"
#include "ghgen/reg.hpp"
#include "ghgen/types.hpp"

namespace ghgen {

/// Describe-request attached to a scenario: answered when the engine's turn
/// counter reaches `turn` (i.e. after events 0..turn-1 have been observed).
struct Query {
  int turn = 0;
  std::string entityId;

  bool operator==(const Query&) const = default;
};

struct Scenario {
  WorldModel world;
  std::vector<UtteranceEvent> events;
  std::vector<Query> queries;

  bool operator==(const Scenario&) const = default;
};

struct RunConfig {
  TransitionModel transitions = TransitionModel::defaults();
  DistanceConfig distance;
  PreferenceOrder prefs = PreferenceOrder::defaults();
};

Scenario parseScenario(const std::string& jsonText);
Scenario loadScenario(const std::filesystem::path& path);
std::string serializeScenario(const Scenario& scenario);

RunConfig parseConfig(const std::string& jsonText);
RunConfig loadConfig(const std::filesystem::path& path);

enum class TraceFormat { Tsv, JsonLines };

// Replays the scenario through a fresh engine and writes the trace: one
// status record per (turn, tracked entity) and one describe record per
// answered query. Probabilities use fixed 6-decimal formatting so equal
// inputs give byte-identical output.
void runBatch(const Scenario& scenario, const RunConfig& config,
              TraceFormat format, std::ostream& out);

}  // namespace ghgen
