#pragma once

#include <stdexcept>
#include <string>

namespace ghgen {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateEntityId : Error {
  explicit DuplicateEntityId(const std::string& id)
      : Error("duplicate entity id: " + id), id(id) {}
  std::string id;
};

struct EmptyTypeName : Error {
  explicit EmptyTypeName(const std::string& id)
      : Error("entity has empty type name: " + id), id(id) {}
  std::string id;
};

struct UnknownEntity : Error {
  explicit UnknownEntity(const std::string& id)
      : Error("unknown entity: " + id), id(id) {}
  std::string id;
};

struct TurnMismatch : Error {
  TurnMismatch(int expected, int got)
      : Error("turn mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)),
        expected(expected), got(got) {}
  int expected;
  int got;
};

struct TargetInDistractors : Error {
  explicit TargetInDistractors(const std::string& id)
      : Error("target appears in its own distractor set: " + id), id(id) {}
  std::string id;
};

struct EmptyDistractorSet : Error {
  EmptyDistractorSet() : Error("DREG called with empty distractor set") {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& message)
      : Error("parse error: " + message) {}
};

struct UnknownEntityInEvent : Error {
  UnknownEntityInEvent(const std::string& id, int turn)
      : Error("event at turn " + std::to_string(turn) +
              " references undeclared entity: " + id),
        id(id), turn(turn) {}
  std::string id;
  int turn;
};

struct NonConsecutiveTurns : Error {
  NonConsecutiveTurns(int expected, int got)
      : Error("dialogue turns must be consecutive from 0: expected " +
              std::to_string(expected) + ", got " + std::to_string(got)) {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace ghgen
