#include "ghgen/repl.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "ghgen/describe.hpp"

namespace ghgen {

namespace {

const char* kUsage =
    "commands:\n"
    "  load <path>      load a scenario file and replay its dialogue\n"
    "  say <speaker> [id:topic|id:mention ...]\n"
    "  step             advance one turn with no mentions\n"
    "  status <id>      print distribution and argmax status\n"
    "  buffers          print the tier buffers\n"
    "  describe <id>    print the generated referring form\n"
    "  quit\n";

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

void printBuffer(std::ostream& out, const char* name,
                 const std::set<std::string>& ids) {
  out << name << ": {";
  bool first = true;
  for (const auto& id : ids) {
    if (!first) out << ", ";
    first = false;
    out << id;
  }
  out << "}\n";
}

}  // namespace

Repl::Repl(RunConfig config) : config_(std::move(config)) {}

void Repl::run(std::istream& in, std::ostream& out, bool prompt) {
  std::string line;
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    if (!dispatch(line, out)) break;
  }
}

bool Repl::dispatch(const std::string& line, std::ostream& out) {
  auto tokens = tokenize(line);
  if (tokens.empty()) return true;
  const std::string& cmd = tokens[0];
  try {
    if (cmd == "quit" || cmd == "exit") return false;
    if (cmd == "load") {
      if (tokens.size() != 2) throw Error("usage: load <path>");
      Scenario s = loadScenario(tokens[1]);
      world_ = s.world;
      engine_ = CognitiveStatusEngine();
      for (const auto& event : s.events)
        engine_.observe(event, world_, config_.transitions);
      out << "loaded " << world_.size() << " entities, replayed "
          << s.events.size() << " turns\n";
    } else if (cmd == "say" || cmd == "step") {
      UtteranceEvent event;
      event.index = engine_.turn();
      if (cmd == "say") {
        if (tokens.size() < 2) throw Error("usage: say <speaker> [id:role ...]");
        event.speaker = tokens[1];
        for (std::size_t i = 2; i < tokens.size(); ++i) {
          auto colon = tokens[i].find(':');
          if (colon == std::string::npos)
            throw Error("mention must be id:topic or id:mention, got \"" +
                        tokens[i] + "\"");
          std::string id = tokens[i].substr(0, colon);
          std::string role = tokens[i].substr(colon + 1);
          if (role == "topic")
            event.annotations[id] = LinguisticStatus::MentionedTopic;
          else if (role == "mention")
            event.annotations[id] = LinguisticStatus::MentionedNonTopic;
          else
            throw Error("unknown role \"" + role + "\"");
        }
      }
      engine_.observe(event, world_, config_.transitions);
      out << "turn " << event.index << " observed\n";
    } else if (cmd == "status") {
      if (tokens.size() != 2) throw Error("usage: status <id>");
      CognitiveStatus s = engine_.getStatus(tokens[1], world_);
      if (const StatusDistribution* d = engine_.filter(tokens[1])) {
        out << std::fixed << std::setprecision(6) << '(' << d->inFocus()
            << ", " << d->activated() << ", " << d->familiar() << ") "
            << toText(s) << '\n';
        out.unsetf(std::ios::fixed);
      } else {
        out << "untracked, " << toText(s) << '\n';
      }
    } else if (cmd == "buffers") {
      printBuffer(out, "B_IF ", engine_.buffer(CognitiveStatus::InFocus));
      printBuffer(out, "B_ACT", engine_.buffer(CognitiveStatus::Activated));
      printBuffer(out, "B_FAM", engine_.buffer(CognitiveStatus::Familiar));
    } else if (cmd == "describe") {
      if (tokens.size() != 2) throw Error("usage: describe <id>");
      DescribeResult r = describe(tokens[1], engine_, world_,
                                  config_.distance, config_.prefs);
      out << render(r.form);
      if (r.form.ambiguous) out << "  [warning: ambiguous]";
      out << '\n';
    } else {
      out << "unknown command: " << cmd << '\n' << kUsage;
    }
  } catch (const Error& e) {
    out << "error: " << e.what() << '\n';
  }
  return true;
}

}  // namespace ghgen
