#include "ghgen/distance.hpp"

#include <algorithm>

namespace ghgen {

void DistanceConfig::validate() const {
  if (wP < 0.0 || wE < 0.0)
    throw ConfigError("distance weights must be non-negative");
  if (std::abs(wP + wE - 1.0) > 1e-9)
    throw ConfigError("distance weights must sum to 1");
  if (dMax <= 0.0) throw ConfigError("dMax must be positive");
  if (eMax <= 0) throw ConfigError("eMax must be a positive integer");
  if (tauClose < 0.0 || tauClose > tauFar || tauFar > 1.0)
    throw ConfigError("thresholds must satisfy 0 <= tauClose <= tauFar <= 1");
}

const char* toText(DistanceVerdict v) {
  switch (v) {
    case DistanceVerdict::Close: return "close";
    case DistanceVerdict::Far: return "far";
    case DistanceVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

double distScore(const Entity& entity, std::optional<int> lastMentionTurn,
                 int currentTurn, const DistanceConfig& cfg) {
  double physical = 1.0;
  if (entity.position)
    physical = std::min(entity.position->norm() / cfg.dMax, 1.0);
  double episodic = 1.0;
  if (lastMentionTurn) {
    double delta = static_cast<double>(currentTurn - *lastMentionTurn);
    episodic = std::min(delta / cfg.eMax, 1.0);
  }
  return cfg.wP * physical + cfg.wE * episodic;
}

DistanceVerdict distVerdict(double score, const DistanceConfig& cfg) {
  if (score < cfg.tauClose) return DistanceVerdict::Close;
  if (score > cfg.tauFar) return DistanceVerdict::Far;
  return DistanceVerdict::Indeterminate;
}

std::pair<std::set<std::string>, std::set<std::string>> partitionDistractors(
    const std::set<std::string>& distractors, const WorldModel& world,
    const std::map<std::string, int>& mentionLog, int currentTurn,
    const DistanceConfig& cfg) {
  std::set<std::string> dThis;
  std::set<std::string> dThat;
  for (const auto& id : distractors) {
    const Entity& e = world.get(id);
    std::optional<int> last;
    if (auto it = mentionLog.find(id); it != mentionLog.end())
      last = it->second;
    double score = distScore(e, last, currentTurn, cfg);
    if (distVerdict(score, cfg) == DistanceVerdict::Close)
      dThis.insert(id);
    else
      dThat.insert(id);
  }
  return {std::move(dThis), std::move(dThat)};
}

}  // namespace ghgen
