#include "ghgen/engine.hpp"

namespace ghgen {

StatusDistribution updateFilter(const StatusDistribution& prior,
                                LinguisticStatus l, const TransitionModel& t) {
  const StatusMatrix& m = t.matrixFor(l);
  std::array<double, 3> pr{prior.inFocus(), prior.activated(),
                           prior.familiar()};
  std::array<double, 3> next{0.0, 0.0, 0.0};
  for (int from = 0; from < 3; ++from)
    for (int to = 0; to < 3; ++to) next[to] += pr[from] * m[from][to];
  double sum = next[0] + next[1] + next[2];
  return StatusDistribution(next[0] / sum, next[1] / sum, next[2] / sum);
}

void CognitiveStatusEngine::observe(const UtteranceEvent& event,
                                    const WorldModel& world,
                                    const TransitionModel& transitions) {
  if (event.index != turn_) throw TurnMismatch(turn_, event.index);
  for (const auto& [id, l] : event.annotations) {
    (void)l;
    if (!world.contains(id)) throw UnknownEntity(id);
  }

  static const StatusDistribution pureFamiliar(0.0, 0.0, 1.0);

  if (turn_ == 0) {
    for (const auto& e : world.entities())
      if (e.initiallyFamiliar) filters_.emplace(e.id, pureFamiliar);
  }
  for (const auto& [id, l] : event.annotations) {
    (void)l;
    filters_.emplace(id, pureFamiliar);
  }

  for (auto& [id, dist] : filters_)
    dist = updateFilter(dist, event.statusOf(id), transitions);

  for (const auto& [id, l] : event.annotations) {
    (void)l;
    lastMention_[id] = event.index;
  }

  resyncBuffers();
  ++turn_;
}

CognitiveStatus CognitiveStatusEngine::getStatus(const std::string& entityId,
                                                 const WorldModel& world) const {
  if (!world.contains(entityId)) throw UnknownEntity(entityId);
  auto it = filters_.find(entityId);
  if (it == filters_.end()) return CognitiveStatus::UniquelyIdentifiable;
  return it->second.argmax();
}

std::set<std::string> CognitiveStatusEngine::getDistractors(
    const std::string& entityId, CognitiveStatus status,
    const WorldModel& world) const {
  if (!world.contains(entityId)) throw UnknownEntity(entityId);
  std::set<std::string> result;
  if (status == CognitiveStatus::UniquelyIdentifiable) {
    for (const auto& e : world.entities()) result.insert(e.id);
  } else {
    result.insert(inFocus_.begin(), inFocus_.end());
    if (status <= CognitiveStatus::Activated)
      result.insert(activated_.begin(), activated_.end());
    if (status <= CognitiveStatus::Familiar)
      result.insert(familiar_.begin(), familiar_.end());
  }
  result.erase(entityId);
  return result;
}

void CognitiveStatusEngine::setFilter(const std::string& entityId,
                                      const StatusDistribution& d) {
  filters_.insert_or_assign(entityId, d);
  resyncBuffers();
}

bool CognitiveStatusEngine::isTracked(const std::string& entityId) const {
  return filters_.count(entityId) > 0;
}

const StatusDistribution* CognitiveStatusEngine::filter(
    const std::string& entityId) const {
  auto it = filters_.find(entityId);
  return it == filters_.end() ? nullptr : &it->second;
}

const std::set<std::string>& CognitiveStatusEngine::buffer(
    CognitiveStatus tier) const {
  switch (tier) {
    case CognitiveStatus::InFocus: return inFocus_;
    case CognitiveStatus::Activated: return activated_;
    default: return familiar_;
  }
}

std::optional<int> CognitiveStatusEngine::lastMention(
    const std::string& entityId) const {
  auto it = lastMention_.find(entityId);
  if (it == lastMention_.end()) return std::nullopt;
  return it->second;
}

void CognitiveStatusEngine::resyncBuffers() {
  inFocus_.clear();
  activated_.clear();
  familiar_.clear();
  for (const auto& [id, dist] : filters_) {
    switch (dist.argmax()) {
      case CognitiveStatus::InFocus: inFocus_.insert(id); break;
      case CognitiveStatus::Activated: activated_.insert(id); break;
      default: familiar_.insert(id); break;
    }
  }
}

}  // namespace ghgen
