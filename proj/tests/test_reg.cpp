#include <doctest.h>

#include <random>

#include "ghgen/reg.hpp"
#include "helpers.hpp"

using namespace ghgen;
using testutil::entity;

namespace {

const PreferenceOrder kPrefs = PreferenceOrder::defaults();

// Brute-force soundness check: every distractor must differ from (or lack a
// value for) at least one selected attribute.
bool rulesOutAll(const Entity& target, const RegResult& r,
                 const std::set<std::string>& distractors,
                 const WorldModel& world) {
  for (const auto& id : distractors) {
    const Entity& d = world.get(id);
    bool ruledOut = false;
    for (const auto& [attr, value] : r.properties) {
      auto v = d.valueOf(attr);
      if (!v || *v != value) {
        ruledOut = true;
        break;
      }
    }
    if (!ruledOut) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("reg selects the distinguishing attribute") {
  WorldModel w({entity("t", "mug", {{"color", "red"}}),
                entity("d1", "mug", {{"color", "blue"}})});
  auto r = reg(w.get("t"), {"d1"}, w, kPrefs);
  CHECK(r.properties ==
        std::vector<std::pair<std::string, std::string>>{{"color", "red"},
                                                         {"type", "mug"}});
  CHECK_FALSE(r.ambiguous);
  CHECK(rulesOutAll(w.get("t"), r, {"d1"}, w));
}

TEST_CASE("reg with no distractors emits only the head noun") {
  WorldModel w({entity("t", "mug", {{"color", "red"}})});
  auto r = reg(w.get("t"), {}, w, kPrefs);
  CHECK(r.properties ==
        std::vector<std::pair<std::string, std::string>>{{"type", "mug"}});
  CHECK_FALSE(r.ambiguous);
}

TEST_CASE("indistinguishable distractor flags ambiguity") {
  WorldModel w({entity("t", "mug", {{"color", "red"}}),
                entity("d2", "mug", {{"color", "red"}})});
  auto r = reg(w.get("t"), {"d2"}, w, kPrefs);
  CHECK(r.properties ==
        std::vector<std::pair<std::string, std::string>>{{"type", "mug"}});
  CHECK(r.ambiguous);
}

TEST_CASE("distractor lacking the attribute is ruled out by it") {
  WorldModel w({entity("t", "mug", {{"color", "red"}}),
                entity("d", "mug")});
  auto r = reg(w.get("t"), {"d"}, w, kPrefs);
  CHECK_FALSE(r.ambiguous);
  CHECK(rulesOutAll(w.get("t"), r, {"d"}, w));
}

TEST_CASE("type participates in ruling out but renders last") {
  WorldModel w({entity("t", "mug", {{"color", "red"}}),
                entity("d1", "bowl", {{"color", "red"}}),
                entity("d2", "mug", {{"color", "blue"}})});
  auto r = reg(w.get("t"), {"d1", "d2"}, w, kPrefs);
  // type rules out d1, color rules out d2; head noun still last
  CHECK(r.properties.back() == std::pair<std::string, std::string>{"type", "mug"});
  CHECK_FALSE(r.ambiguous);
  CHECK(rulesOutAll(w.get("t"), r, {"d1", "d2"}, w));
}

TEST_CASE("reg error contracts") {
  WorldModel w({entity("t", "mug")});
  CHECK_THROWS_AS(reg(w.get("t"), {"t"}, w, kPrefs), TargetInDistractors);
  CHECK_THROWS_AS(reg(w.get("t"), {"ghost"}, w, kPrefs), UnknownEntity);
}

TEST_CASE("preference order validation") {
  CHECK_NOTHROW(kPrefs.validate());
  PreferenceOrder noType{{"color", "size"}};
  CHECK_THROWS_AS(noType.validate(), ConfigError);
  PreferenceOrder dup{{"type", "color", "color"}};
  CHECK_THROWS_AS(dup.validate(), ConfigError);
}

TEST_CASE("randomized soundness and subset monotonicity") {
  std::mt19937 rng(13);
  const std::vector<std::string> attrs{"color", "size", "material",
                                       "location-label"};
  const std::vector<std::string> values{"v0", "v1", "v2", "v3"};
  const std::vector<std::string> types{"mug", "bowl"};
  std::uniform_int_distribution<int> pickN(2, 8);
  std::uniform_int_distribution<int> pickV(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);

  for (int run = 0; run < 200; ++run) {
    WorldModel w;
    int n = pickN(rng);
    for (int i = 0; i < n; ++i) {
      Entity e;
      e.id = "e" + std::to_string(i);
      e.typeName = types[coin(rng)];
      for (const auto& a : attrs)
        if (coin(rng)) e.attributes[a] = values[pickV(rng)];
      w.add(std::move(e));
    }
    const Entity& target = w.entities()[0];
    std::set<std::string> all;
    for (int i = 1; i < n; ++i) all.insert("e" + std::to_string(i));

    auto full = reg(target, all, w, kPrefs);
    if (!full.ambiguous) CHECK(rulesOutAll(target, full, all, w));

    // drop a random distractor; a solvable set must stay solvable
    if (!all.empty()) {
      std::set<std::string> fewer = all;
      fewer.erase(std::next(fewer.begin(),
                            std::uniform_int_distribution<std::size_t>(
                                0, fewer.size() - 1)(rng)));
      auto sub = reg(target, fewer, w, kPrefs);
      if (!full.ambiguous) CHECK_FALSE(sub.ambiguous);
    }

    // determinism
    auto again = reg(target, all, w, kPrefs);
    CHECK(again.properties == full.properties);
    CHECK(again.ambiguous == full.ambiguous);
  }
}
