#include "ghgen/scenario.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ghgen/describe.hpp"
#include "ghgen/engine.hpp"

namespace ghgen {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

LinguisticStatus parseRole(const std::string& role) {
  if (role == "topic") return LinguisticStatus::MentionedTopic;
  if (role == "mention") return LinguisticStatus::MentionedNonTopic;
  throw ParseError("mention role must be \"topic\" or \"mention\", got \"" +
                   role + "\"");
}

Entity parseEntity(const json& j) {
  Entity e;
  e.id = j.at("id").get<std::string>();
  e.typeName = j.at("type").get<std::string>();
  if (j.contains("attributes"))
    for (const auto& [name, value] : j.at("attributes").items())
      e.attributes[name] = value.get<std::string>();
  if (j.contains("position")) {
    const auto& p = j.at("position");
    if (!p.is_array() || p.size() != 3)
      throw ParseError("position must be a 3-element array for entity " + e.id);
    e.position = Vec3{p[0].get<double>(), p[1].get<double>(),
                      p[2].get<double>()};
  }
  if (j.contains("familiar")) e.initiallyFamiliar = j.at("familiar").get<bool>();
  return e;
}

StatusMatrix parseMatrix(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError("transition matrix \"" + key + "\" must be 3x3");
  StatusMatrix m;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3)
      throw ParseError("transition matrix \"" + key + "\" must be 3x3");
    for (int c = 0; c < 3; ++c) m[r][c] = j[r][c].get<double>();
  }
  return m;
}

Scenario scenarioFromJson(const json& doc) {
  Scenario s;
  if (!doc.contains("world")) throw ParseError("missing \"world\" key");
  for (const auto& ej : doc.at("world")) s.world.add(parseEntity(ej));
  validateWorld(s.world);

  if (doc.contains("dialogue")) {
    int index = 0;
    for (const auto& ev : doc.at("dialogue")) {
      UtteranceEvent event;
      if (ev.contains("turn") && ev.at("turn").get<int>() != index)
        throw NonConsecutiveTurns(index, ev.at("turn").get<int>());
      event.index = index;
      event.speaker = ev.value("speaker", "");
      if (ev.contains("mentions")) {
        for (const auto& m : ev.at("mentions")) {
          std::string id = m.at("id").get<std::string>();
          if (!s.world.contains(id)) throw UnknownEntityInEvent(id, index);
          event.annotations[id] = parseRole(m.at("role").get<std::string>());
        }
      }
      s.events.push_back(std::move(event));
      ++index;
    }
  }

  if (doc.contains("queries")) {
    for (const auto& q : doc.at("queries")) {
      Query query{q.at("turn").get<int>(), q.at("id").get<std::string>()};
      if (!s.world.contains(query.entityId))
        throw UnknownEntity(query.entityId);
      int lastValid = static_cast<int>(s.events.size());
      if (query.turn < 0 || query.turn > lastValid)
        throw ParseError("query turn " + std::to_string(query.turn) +
                         " out of range [0, " + std::to_string(lastValid) +
                         "]");
      s.queries.push_back(std::move(query));
    }
  }
  return s;
}

}  // namespace

Scenario parseScenario(const std::string& jsonText) {
  json doc;
  try {
    doc = json::parse(jsonText);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    return scenarioFromJson(doc);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

Scenario loadScenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseScenario(buf.str());
}

std::string serializeScenario(const Scenario& scenario) {
  ordered_json doc;
  doc["world"] = ordered_json::array();
  for (const auto& e : scenario.world.entities()) {
    ordered_json ej;
    ej["id"] = e.id;
    ej["type"] = e.typeName;
    if (!e.attributes.empty()) {
      ordered_json attrs = ordered_json::object();
      for (const auto& [k, v] : e.attributes) attrs[k] = v;
      ej["attributes"] = attrs;
    }
    if (e.position)
      ej["position"] = {e.position->x, e.position->y, e.position->z};
    if (e.initiallyFamiliar) ej["familiar"] = true;
    doc["world"].push_back(ej);
  }
  doc["dialogue"] = ordered_json::array();
  for (const auto& event : scenario.events) {
    ordered_json ev;
    ev["speaker"] = event.speaker;
    ev["mentions"] = ordered_json::array();
    for (const auto& [id, l] : event.annotations) {
      ev["mentions"].push_back(
          {{"id", id},
           {"role", l == LinguisticStatus::MentionedTopic ? "topic"
                                                          : "mention"}});
    }
    doc["dialogue"].push_back(ev);
  }
  if (!scenario.queries.empty()) {
    doc["queries"] = ordered_json::array();
    for (const auto& q : scenario.queries)
      doc["queries"].push_back({{"turn", q.turn}, {"id", q.entityId}});
  }
  return doc.dump(2) + "\n";
}

RunConfig parseConfig(const std::string& jsonText) {
  json doc;
  try {
    doc = json::parse(jsonText);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  RunConfig cfg;
  try {
    if (doc.contains("transitions")) {
      const auto& t = doc.at("transitions");
      cfg.transitions = TransitionModel(parseMatrix(t.at("T"), "T"),
                                        parseMatrix(t.at("M"), "M"),
                                        parseMatrix(t.at("N"), "N"));
    }
    if (doc.contains("distance")) {
      const auto& d = doc.at("distance");
      cfg.distance.wP = d.value("wP", cfg.distance.wP);
      cfg.distance.wE = d.value("wE", cfg.distance.wE);
      cfg.distance.dMax = d.value("dMax", cfg.distance.dMax);
      cfg.distance.eMax = d.value("eMax", cfg.distance.eMax);
      cfg.distance.tauClose = d.value("tauClose", cfg.distance.tauClose);
      cfg.distance.tauFar = d.value("tauFar", cfg.distance.tauFar);
    }
    if (doc.contains("preference_order"))
      cfg.prefs.attributes =
          doc.at("preference_order").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  cfg.distance.validate();
  cfg.prefs.validate();
  return cfg;
}

RunConfig loadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseConfig(buf.str());
}

namespace {

std::string fixed6(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << v;
  return out.str();
}

std::string joinIds(const std::set<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ',';
    out += id;
  }
  return out.empty() ? "-" : out;
}

std::string joinProperties(
    const std::vector<std::pair<std::string, std::string>>& props) {
  std::string out;
  for (const auto& [a, v] : props) {
    if (!out.empty()) out += ',';
    out += a + "=" + v;
  }
  return out.empty() ? "-" : out;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

void emitStatus(std::ostream& out, TraceFormat format, int turn,
                const std::string& id, const StatusDistribution& d) {
  const char* tier = toText(d.argmax());
  if (format == TraceFormat::Tsv) {
    out << "status\t" << turn << '\t' << id << '\t' << fixed6(d.inFocus())
        << '\t' << fixed6(d.activated()) << '\t' << fixed6(d.familiar())
        << '\t' << tier << '\t' << tier << '\n';
  } else {
    out << "{\"record\":\"status\",\"turn\":" << turn
        << ",\"entity\":" << quoted(id) << ",\"pI\":" << fixed6(d.inFocus())
        << ",\"pA\":" << fixed6(d.activated())
        << ",\"pF\":" << fixed6(d.familiar()) << ",\"argmax\":" << quoted(tier)
        << ",\"buffer\":" << quoted(tier) << "}\n";
  }
}

void emitDescribe(std::ostream& out, TraceFormat format, int turn,
                  const std::string& id, const DescribeResult& r) {
  if (format == TraceFormat::Tsv) {
    out << "describe\t" << turn << '\t' << id << '\t' << toText(r.form.kind)
        << '\t' << joinProperties(r.form.npProperties) << '\t'
        << (r.form.ambiguous ? "ambiguous" : "ok") << '\t'
        << joinIds(r.distractorsUsed) << '\n';
  } else {
    out << "{\"record\":\"describe\",\"turn\":" << turn
        << ",\"entity\":" << quoted(id)
        << ",\"form\":" << quoted(toText(r.form.kind)) << ",\"properties\":[";
    bool first = true;
    for (const auto& [a, v] : r.form.npProperties) {
      if (!first) out << ',';
      first = false;
      out << '[' << quoted(a) << ',' << quoted(v) << ']';
    }
    out << "],\"ambiguous\":" << (r.form.ambiguous ? "true" : "false")
        << ",\"distractors\":[";
    first = true;
    for (const auto& d : r.distractorsUsed) {
      if (!first) out << ',';
      first = false;
      out << quoted(d);
    }
    out << "]}\n";
  }
}

}  // namespace

void runBatch(const Scenario& scenario, const RunConfig& config,
              TraceFormat format, std::ostream& out) {
  CognitiveStatusEngine engine;
  int lastTurn = static_cast<int>(scenario.events.size());
  for (int t = 0; t <= lastTurn; ++t) {
    for (const auto& q : scenario.queries) {
      if (q.turn != t) continue;
      DescribeResult r =
          describe(q.entityId, engine, scenario.world, config.distance,
                   config.prefs);
      emitDescribe(out, format, t, q.entityId, r);
    }
    if (t == lastTurn) break;
    engine.observe(scenario.events[t], scenario.world, config.transitions);
    for (const auto& [id, dist] : engine.filters())
      emitStatus(out, format, t, id, dist);
  }
}

}  // namespace ghgen
