#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghgen/errors.hpp"

namespace ghgen {

// Ordered so that the built-in comparison gives the Givenness Hierarchy
// nesting: InFocus > Activated > Familiar > UniquelyIdentifiable.
enum class CognitiveStatus {
  UniquelyIdentifiable = 0,
  Familiar = 1,
  Activated = 2,
  InFocus = 3,
};

enum class LinguisticStatus {
  NotMentioned,
  MentionedNonTopic,
  MentionedTopic,
};

const char* toText(CognitiveStatus s);
const char* toText(LinguisticStatus l);

/// Probability distribution over {InFocus, Activated, Familiar} for one
/// entity. Validated on construction: components non-negative, sum within
/// 1e-9 of 1.
class StatusDistribution {
 public:
  StatusDistribution(double inFocus, double activated, double familiar);

  double inFocus() const { return p_[0]; }
  double activated() const { return p_[1]; }
  double familiar() const { return p_[2]; }

  // Most probable status, ties broken toward the lower status
  // (Familiar over Activated over InFocus).
  CognitiveStatus argmax() const;

  static constexpr double kSumTolerance = 1e-9;

 private:
  std::array<double, 3> p_;  // indexed I, A, F
};

// Row-stochastic 3x3 matrix over {I, A, F}; rows = prior status,
// columns = next status.
using StatusMatrix = std::array<std::array<double, 3>, 3>;

/// One transition matrix per linguistic status value. Each matrix is
/// checked row-stochastic on construction.
class TransitionModel {
 public:
  TransitionModel(const StatusMatrix& topic, const StatusMatrix& nonTopic,
                  const StatusMatrix& notMentioned);

  static TransitionModel defaults();

  const StatusMatrix& matrixFor(LinguisticStatus l) const;

 private:
  StatusMatrix topic_;
  StatusMatrix nonTopic_;
  StatusMatrix notMentioned_;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  bool operator==(const Vec3&) const = default;
};

struct Entity {
  std::string id;
  std::string typeName;                          // head noun, e.g. "mug"
  std::map<std::string, std::string> attributes; // name -> opaque value
  std::optional<Vec3> position;                  // meters, speaker-relative
  bool initiallyFamiliar = false;

  // Attribute lookup with "type" aliased to the head noun.
  std::optional<std::string> valueOf(const std::string& attribute) const;

  bool operator==(const Entity&) const = default;
};

/// Entity catalog; the universe for UID-level distractor sets. Iteration
/// order is insertion order.
class WorldModel {
 public:
  WorldModel() = default;
  explicit WorldModel(std::vector<Entity> entities);

  void add(Entity e);

  bool contains(const std::string& id) const;
  const Entity* find(const std::string& id) const;
  const Entity& get(const std::string& id) const;  // throws UnknownEntity

  const std::vector<Entity>& entities() const { return entities_; }
  std::size_t size() const { return entities_.size(); }

  bool operator==(const WorldModel& other) const {
    return entities_ == other.entities_;
  }

 private:
  std::vector<Entity> entities_;
};

// Throws DuplicateEntityId or EmptyTypeName; returns its argument otherwise.
const WorldModel& validateWorld(const WorldModel& world);

/// One dialogue turn. Only non-NotMentioned entities are stored; absent
/// entities are implicitly NotMentioned.
struct UtteranceEvent {
  int index = 0;
  std::string speaker;
  std::map<std::string, LinguisticStatus> annotations;

  LinguisticStatus statusOf(const std::string& entityId) const;

  bool operator==(const UtteranceEvent&) const = default;
};

enum class FormKind { It, BareThis, BareThat, ThisNP, ThatNP, TheNP };

const char* toText(FormKind k);
bool isPronoun(FormKind k);

/// Generated referring form: form kind plus, for NP kinds, the ordered
/// property list (head noun last).
struct ReferringForm {
  FormKind kind = FormKind::TheNP;
  std::vector<std::pair<std::string, std::string>> npProperties;
  bool ambiguous = false;

  bool operator==(const ReferringForm&) const = default;
};

// Surface text, e.g. "that red mug" or "it". Ambiguity flagging is left
// to callers.
std::string render(const ReferringForm& form);

}  // namespace ghgen
