#include "ghgen/describe.hpp"

namespace ghgen {

namespace {

DistanceVerdict targetVerdict(const std::string& entityId,
                              const CognitiveStatusEngine& engine,
                              const WorldModel& world,
                              const DistanceConfig& cfg) {
  double score = distScore(world.get(entityId), engine.lastMention(entityId),
                           engine.turn(), cfg);
  return distVerdict(score, cfg);
}

DescribeResult npForm(FormKind kind, const Entity& target,
                      const std::set<std::string>& used,
                      const WorldModel& world, const PreferenceOrder& prefs) {
  RegResult r = reg(target, used, world, prefs);
  DescribeResult out;
  out.form = ReferringForm{kind, std::move(r.properties), r.ambiguous};
  out.distractorsUsed = used;
  return out;
}

}  // namespace

DescribeResult dreg(const std::string& entityId,
                    const std::set<std::string>& distractors,
                    const WorldModel& world,
                    const CognitiveStatusEngine& engine,
                    const DistanceConfig& cfg, const PreferenceOrder& prefs) {
  if (distractors.empty()) throw EmptyDistractorSet();
  const Entity& target = world.get(entityId);
  DistanceVerdict verdict = targetVerdict(entityId, engine, world, cfg);
  auto [dThis, dThat] = partitionDistractors(distractors, world,
                                             engine.mentionLog(),
                                             engine.turn(), cfg);
  DescribeResult out;
  switch (verdict) {
    case DistanceVerdict::Close:
      out = npForm(FormKind::ThisNP, target, dThis, world, prefs);
      break;
    case DistanceVerdict::Far:
      out = npForm(FormKind::ThatNP, target, dThat, world, prefs);
      break;
    case DistanceVerdict::Indeterminate:
      out = npForm(FormKind::TheNP, target, distractors, world, prefs);
      break;
  }
  out.verdict = verdict;
  out.distractors = distractors;
  return out;
}

DescribeResult describe(const std::string& entityId,
                        const CognitiveStatusEngine& engine,
                        const WorldModel& world, const DistanceConfig& cfg,
                        const PreferenceOrder& prefs) {
  const Entity& target = world.get(entityId);
  CognitiveStatus status = engine.getStatus(entityId, world);
  std::set<std::string> distractors =
      engine.getDistractors(entityId, status, world);
  DistanceVerdict verdict = targetVerdict(entityId, engine, world, cfg);

  DescribeResult out;
  switch (status) {
    case CognitiveStatus::UniquelyIdentifiable:
      out = npForm(FormKind::TheNP, target, distractors, world, prefs);
      break;
    case CognitiveStatus::Familiar:
      out = npForm(FormKind::ThatNP, target, distractors, world, prefs);
      break;
    case CognitiveStatus::Activated:
      if (distractors.empty()) {
        // Binary branch: anything not confidently close gets "that".
        out.form.kind = verdict == DistanceVerdict::Close ? FormKind::BareThis
                                                          : FormKind::BareThat;
      } else {
        out = dreg(entityId, distractors, world, engine, cfg, prefs);
      }
      break;
    case CognitiveStatus::InFocus:
      if (distractors.empty())
        out.form.kind = FormKind::It;
      else
        out = dreg(entityId, distractors, world, engine, cfg, prefs);
      break;
  }
  out.status = status;
  out.verdict = verdict;
  out.distractors = distractors;
  return out;
}

}  // namespace ghgen
