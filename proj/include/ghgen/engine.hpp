#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "ghgen/types.hpp"

namespace ghgen {

// One Bayesian filter step: predict with the matrix selected by L, then
// normalize (a no-op for row-stochastic matrices).
StatusDistribution updateFilter(const StatusDistribution& prior,
                                LinguisticStatus l, const TransitionModel& t);

/// Bank of per-entity cognitive status filters plus the three tier buffers.
/// observe() calls must be serialized by the caller; the read-only queries
/// are safe to run concurrently between updates.
class CognitiveStatusEngine {
 public:
  CognitiveStatusEngine() = default;

  // Advances every filter one step for the given utterance. Creates filters
  // at (0,0,1) for newly mentioned entities (and, on turn 0, for entities
  // flagged initiallyFamiliar) before the step. Re-syncs the tier buffers
  // and increments the turn counter.
  void observe(const UtteranceEvent& event, const WorldModel& world,
               const TransitionModel& transitions);

  // Algorithm 1: argmax status for tracked entities, UID for untracked.
  CognitiveStatus getStatus(const std::string& entityId,
                            const WorldModel& world) const;

  // Union of the tier buffers at the target's status and above, minus the
  // target. For UID: the whole world minus the target.
  std::set<std::string> getDistractors(const std::string& entityId,
                                       CognitiveStatus status,
                                       const WorldModel& world) const;

  // Installs or overwrites a filter at the given distribution and re-syncs
  // the buffers. Used to seed engine state outside of dialogue replay.
  void setFilter(const std::string& entityId, const StatusDistribution& d);

  bool isTracked(const std::string& entityId) const;
  const StatusDistribution* filter(const std::string& entityId) const;
  const std::map<std::string, StatusDistribution>& filters() const {
    return filters_;
  }

  const std::set<std::string>& buffer(CognitiveStatus tier) const;

  int turn() const { return turn_; }
  std::optional<int> lastMention(const std::string& entityId) const;
  const std::map<std::string, int>& mentionLog() const { return lastMention_; }

 private:
  void resyncBuffers();

  std::map<std::string, StatusDistribution> filters_;
  std::set<std::string> inFocus_;
  std::set<std::string> activated_;
  std::set<std::string> familiar_;
  std::map<std::string, int> lastMention_;
  int turn_ = 0;
};

}  // namespace ghgen
