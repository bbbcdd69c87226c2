#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "ghgen/types.hpp"

namespace ghgen {

struct DistanceConfig {
  double wP = 0.5;        // weight of the physical term
  double wE = 0.5;        // weight of the episodic term
  double dMax = 2.0;      // physical normalization cap, meters
  int eMax = 10;          // episodic normalization cap, turns
  double tauClose = 0.3;
  double tauFar = 0.6;

  void validate() const;  // throws ConfigError
};

enum class DistanceVerdict { Close, Far, Indeterminate };

const char* toText(DistanceVerdict v);

// Weighted sum of normalized physical and episodic distance, in [0,1].
// Missing position or no prior mention pins the respective term at 1.
double distScore(const Entity& entity, std::optional<int> lastMentionTurn,
                 int currentTurn, const DistanceConfig& cfg);

// Close on [0, tauClose), Indeterminate on [tauClose, tauFar],
// Far on (tauFar, 1].
DistanceVerdict distVerdict(double score, const DistanceConfig& cfg);

// Splits a distractor set into the proximal subset (verdict Close) and the
// rest. Indeterminate entities go to dThat.
std::pair<std::set<std::string>, std::set<std::string>> partitionDistractors(
    const std::set<std::string>& distractors, const WorldModel& world,
    const std::map<std::string, int>& mentionLog, int currentTurn,
    const DistanceConfig& cfg);

}  // namespace ghgen
