#include "ghgen/reg.hpp"

#include <algorithm>
#include <set>

namespace ghgen {

PreferenceOrder PreferenceOrder::defaults() {
  return {{"type", "color", "size", "material", "location-label"}};
}

void PreferenceOrder::validate() const {
  std::set<std::string> seen;
  for (const auto& a : attributes)
    if (!seen.insert(a).second)
      throw ConfigError("duplicate attribute in preference order: " + a);
  if (!seen.count("type"))
    throw ConfigError("preference order must contain \"type\"");
}

RegResult reg(const Entity& target, const std::set<std::string>& distractors,
              const WorldModel& world, const PreferenceOrder& prefs) {
  if (distractors.count(target.id)) throw TargetInDistractors(target.id);

  std::vector<const Entity*> remaining;
  remaining.reserve(distractors.size());
  for (const auto& id : distractors) remaining.push_back(&world.get(id));

  RegResult result;
  for (const auto& attr : prefs.attributes) {
    if (remaining.empty()) break;
    auto targetValue = target.valueOf(attr);
    if (!targetValue) continue;
    auto ruledOut = [&](const Entity* d) {
      auto v = d->valueOf(attr);
      return !v || *v != *targetValue;
    };
    if (std::none_of(remaining.begin(), remaining.end(), ruledOut)) continue;
    std::erase_if(remaining, ruledOut);
    if (attr != "type") result.properties.emplace_back(attr, *targetValue);
  }

  // Head noun goes last regardless of where (or whether) it was selected.
  result.properties.emplace_back("type", target.typeName);
  result.ambiguous = !remaining.empty();
  return result;
}

}  // namespace ghgen
