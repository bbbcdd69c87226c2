#include <doctest.h>

#include "ghgen/types.hpp"
#include "helpers.hpp"

using namespace ghgen;

TEST_CASE("status distribution validates on construction") {
  CHECK_NOTHROW(StatusDistribution(0.2, 0.3, 0.5));
  CHECK_NOTHROW(StatusDistribution(0.0, 0.0, 1.0));
  CHECK_THROWS_AS(StatusDistribution(0.5, 0.5, 0.5), Error);
  CHECK_THROWS_AS(StatusDistribution(-0.1, 0.6, 0.5), Error);
  CHECK_THROWS_AS(StatusDistribution(0.2, 0.3, 0.5 + 1e-6), Error);
  // within tolerance is fine
  CHECK_NOTHROW(StatusDistribution(0.2, 0.3, 0.5 + 5e-10));
}

TEST_CASE("argmax breaks ties toward the lower status") {
  CHECK(StatusDistribution(0.5, 0.5, 0.0).argmax() ==
        CognitiveStatus::Activated);
  CHECK(StatusDistribution(0.5, 0.0, 0.5).argmax() ==
        CognitiveStatus::Familiar);
  CHECK(StatusDistribution(1.0 / 3, 1.0 / 3, 1.0 / 3).argmax() ==
        CognitiveStatus::Familiar);
  CHECK(StatusDistribution(0.6, 0.3, 0.1).argmax() ==
        CognitiveStatus::InFocus);
}

TEST_CASE("cognitive status ordering follows the hierarchy") {
  CHECK(CognitiveStatus::InFocus > CognitiveStatus::Activated);
  CHECK(CognitiveStatus::Activated > CognitiveStatus::Familiar);
  CHECK(CognitiveStatus::Familiar > CognitiveStatus::UniquelyIdentifiable);
}

TEST_CASE("transition model rejects non-row-stochastic matrices") {
  StatusMatrix ok{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  StatusMatrix badSum{{{0.5, 0.4, 0.0}, {0, 1, 0}, {0, 0, 1}}};
  StatusMatrix negative{{{1.2, -0.2, 0.0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK_NOTHROW(TransitionModel(ok, ok, ok));
  CHECK_THROWS_AS(TransitionModel(badSum, ok, ok), Error);
  CHECK_THROWS_AS(TransitionModel(ok, negative, ok), Error);
  CHECK_NOTHROW(TransitionModel::defaults());
}

TEST_CASE("validateWorld") {
  SUBCASE("valid world passes through") {
    WorldModel w({testutil::entity("m1", "mug"), testutil::entity("m2", "mug")});
    CHECK(&validateWorld(w) == &w);
  }
  SUBCASE("duplicate ids rejected") {
    WorldModel w({testutil::entity("m1", "mug"), testutil::entity("m1", "cup")});
    CHECK_THROWS_AS(validateWorld(w), DuplicateEntityId);
  }
  SUBCASE("empty type name rejected") {
    WorldModel w({testutil::entity("x", "")});
    CHECK_THROWS_AS(validateWorld(w), EmptyTypeName);
  }
}

TEST_CASE("world lookup") {
  WorldModel w({testutil::entity("m1", "mug")});
  CHECK(w.contains("m1"));
  CHECK_FALSE(w.contains("ghost"));
  CHECK(w.get("m1").typeName == "mug");
  CHECK_THROWS_AS(w.get("ghost"), UnknownEntity);
}

TEST_CASE("entity valueOf aliases type to the head noun") {
  Entity e = testutil::entity("m1", "mug", {{"color", "red"}});
  CHECK(e.valueOf("type") == "mug");
  CHECK(e.valueOf("color") == "red");
  CHECK_FALSE(e.valueOf("size").has_value());
}

TEST_CASE("referring form rendering") {
  CHECK(render({FormKind::It, {}, false}) == "it");
  CHECK(render({FormKind::BareThis, {}, false}) == "this");
  CHECK(render({FormKind::BareThat, {}, false}) == "that");
  CHECK(render({FormKind::ThatNP, {{"color", "red"}, {"type", "mug"}}, false}) ==
        "that red mug");
  CHECK(render({FormKind::TheNP, {{"type", "mug"}}, true}) == "the mug");
}
