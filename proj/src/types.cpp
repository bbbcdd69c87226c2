#include "ghgen/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ghgen {

const char* toText(CognitiveStatus s) {
  switch (s) {
    case CognitiveStatus::InFocus: return "InFocus";
    case CognitiveStatus::Activated: return "Activated";
    case CognitiveStatus::Familiar: return "Familiar";
    case CognitiveStatus::UniquelyIdentifiable: return "UniquelyIdentifiable";
  }
  return "?";
}

const char* toText(LinguisticStatus l) {
  switch (l) {
    case LinguisticStatus::NotMentioned: return "N";
    case LinguisticStatus::MentionedNonTopic: return "M";
    case LinguisticStatus::MentionedTopic: return "T";
  }
  return "?";
}

StatusDistribution::StatusDistribution(double inFocus, double activated,
                                       double familiar)
    : p_{inFocus, activated, familiar} {
  for (double v : p_) {
    if (v < 0.0)
      throw Error("status distribution has negative component");
  }
  double sum = p_[0] + p_[1] + p_[2];
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw Error("status distribution does not sum to 1 (sum=" +
                std::to_string(sum) + ")");
}

CognitiveStatus StatusDistribution::argmax() const {
  if (p_[2] >= p_[1] && p_[2] >= p_[0]) return CognitiveStatus::Familiar;
  if (p_[1] >= p_[0]) return CognitiveStatus::Activated;
  return CognitiveStatus::InFocus;
}

namespace {

void checkRowStochastic(const StatusMatrix& m, const char* label) {
  for (int r = 0; r < 3; ++r) {
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
      if (m[r][c] < 0.0)
        throw Error(std::string("transition matrix ") + label +
                    " has negative entry");
      sum += m[r][c];
    }
    if (std::abs(sum - 1.0) > StatusDistribution::kSumTolerance)
      throw Error(std::string("transition matrix ") + label + " row " +
                  std::to_string(r) + " does not sum to 1");
  }
}

}  // namespace

TransitionModel::TransitionModel(const StatusMatrix& topic,
                                 const StatusMatrix& nonTopic,
                                 const StatusMatrix& notMentioned)
    : topic_(topic), nonTopic_(nonTopic), notMentioned_(notMentioned) {
  checkRowStochastic(topic_, "T");
  checkRowStochastic(nonTopic_, "M");
  checkRowStochastic(notMentioned_, "N");
}

TransitionModel TransitionModel::defaults() {
  StatusMatrix topic{{{0.90, 0.09, 0.01},
                      {0.90, 0.09, 0.01},
                      {0.90, 0.09, 0.01}}};
  StatusMatrix nonTopic{{{0.30, 0.60, 0.10},
                         {0.30, 0.60, 0.10},
                         {0.30, 0.60, 0.10}}};
  StatusMatrix notMentioned{{{0.40, 0.50, 0.10},
                             {0.00, 0.60, 0.40},
                             {0.00, 0.00, 1.00}}};
  return TransitionModel(topic, nonTopic, notMentioned);
}

const StatusMatrix& TransitionModel::matrixFor(LinguisticStatus l) const {
  switch (l) {
    case LinguisticStatus::MentionedTopic: return topic_;
    case LinguisticStatus::MentionedNonTopic: return nonTopic_;
    case LinguisticStatus::NotMentioned: return notMentioned_;
  }
  return notMentioned_;
}

std::optional<std::string> Entity::valueOf(const std::string& attribute) const {
  if (attribute == "type") return typeName;
  auto it = attributes.find(attribute);
  if (it == attributes.end()) return std::nullopt;
  return it->second;
}

WorldModel::WorldModel(std::vector<Entity> entities)
    : entities_(std::move(entities)) {}

void WorldModel::add(Entity e) { entities_.push_back(std::move(e)); }

bool WorldModel::contains(const std::string& id) const {
  return find(id) != nullptr;
}

const Entity* WorldModel::find(const std::string& id) const {
  for (const auto& e : entities_)
    if (e.id == id) return &e;
  return nullptr;
}

const Entity& WorldModel::get(const std::string& id) const {
  const Entity* e = find(id);
  if (!e) throw UnknownEntity(id);
  return *e;
}

const WorldModel& validateWorld(const WorldModel& world) {
  std::set<std::string> seen;
  for (const auto& e : world.entities()) {
    if (!seen.insert(e.id).second) throw DuplicateEntityId(e.id);
    if (e.typeName.empty()) throw EmptyTypeName(e.id);
  }
  return world;
}

LinguisticStatus UtteranceEvent::statusOf(const std::string& entityId) const {
  auto it = annotations.find(entityId);
  return it == annotations.end() ? LinguisticStatus::NotMentioned : it->second;
}

const char* toText(FormKind k) {
  switch (k) {
    case FormKind::It: return "it";
    case FormKind::BareThis: return "this";
    case FormKind::BareThat: return "that";
    case FormKind::ThisNP: return "this-NP";
    case FormKind::ThatNP: return "that-NP";
    case FormKind::TheNP: return "the-NP";
  }
  return "?";
}

bool isPronoun(FormKind k) {
  return k == FormKind::It || k == FormKind::BareThis ||
         k == FormKind::BareThat;
}

std::string render(const ReferringForm& form) {
  switch (form.kind) {
    case FormKind::It: return "it";
    case FormKind::BareThis: return "this";
    case FormKind::BareThat: return "that";
    default: break;
  }
  std::ostringstream out;
  switch (form.kind) {
    case FormKind::ThisNP: out << "this"; break;
    case FormKind::ThatNP: out << "that"; break;
    default: out << "the"; break;
  }
  for (const auto& [attr, value] : form.npProperties) out << ' ' << value;
  return out.str();
}

}  // namespace ghgen
