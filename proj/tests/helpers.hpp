#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghgen/types.hpp"

namespace testutil {

inline ghgen::Entity entity(std::string id, std::string type,
                            std::map<std::string, std::string> attrs = {},
                            std::optional<ghgen::Vec3> pos = std::nullopt,
                            bool familiar = false) {
  ghgen::Entity e;
  e.id = std::move(id);
  e.typeName = std::move(type);
  e.attributes = std::move(attrs);
  e.position = pos;
  e.initiallyFamiliar = familiar;
  return e;
}

inline ghgen::UtteranceEvent event(
    int index,
    std::map<std::string, ghgen::LinguisticStatus> annotations = {},
    std::string speaker = "s") {
  ghgen::UtteranceEvent ev;
  ev.index = index;
  ev.speaker = std::move(speaker);
  ev.annotations = std::move(annotations);
  return ev;
}

}  // namespace testutil
