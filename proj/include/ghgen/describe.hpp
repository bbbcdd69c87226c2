#pragma once

#include <set>
#include <string>

#include "ghgen/distance.hpp"
#include "ghgen/engine.hpp"
#include "ghgen/reg.hpp"
#include "ghgen/types.hpp"

namespace ghgen {

/// Referring form plus the diagnostics trace records need: the status-level
/// distractor set and the (possibly distance-reduced) subset actually handed
/// to content selection.
struct DescribeResult {
  ReferringForm form;
  CognitiveStatus status = CognitiveStatus::UniquelyIdentifiable;
  DistanceVerdict verdict = DistanceVerdict::Indeterminate;
  std::set<std::string> distractors;      // GetDistractors output
  std::set<std::string> distractorsUsed;  // set passed to reg; empty for pronouns
};

// Algorithm 2 (Describe).
DescribeResult describe(const std::string& entityId,
                        const CognitiveStatusEngine& engine,
                        const WorldModel& world, const DistanceConfig& cfg,
                        const PreferenceOrder& prefs);

// Algorithm 3 (DREG); requires a non-empty distractor set.
DescribeResult dreg(const std::string& entityId,
                    const std::set<std::string>& distractors,
                    const WorldModel& world,
                    const CognitiveStatusEngine& engine,
                    const DistanceConfig& cfg, const PreferenceOrder& prefs);

}  // namespace ghgen
