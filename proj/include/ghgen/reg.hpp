#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ghgen/types.hpp"

namespace ghgen {

/// Attribute names tried in order by the incremental algorithm; must
/// contain "type" (the head-noun attribute) and no duplicates.
struct PreferenceOrder {
  std::vector<std::string> attributes;

  static PreferenceOrder defaults();
  void validate() const;  // throws ConfigError
};

struct RegResult {
  // Selection order, head noun last.
  std::vector<std::pair<std::string, std::string>> properties;
  bool ambiguous = false;
};

// Incremental algorithm: walk the preference order, keeping an attribute iff
// the target has a value for it and it rules out at least one remaining
// distractor (value differs or absent). The head noun is always included.
// ambiguous is set when distractors survive the whole preference order.
RegResult reg(const Entity& target, const std::set<std::string>& distractors,
              const WorldModel& world, const PreferenceOrder& prefs);

}  // namespace ghgen
