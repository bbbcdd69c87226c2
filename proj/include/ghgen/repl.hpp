#pragma once

#include <iosfwd>

#include "ghgen/engine.hpp"
#include "ghgen/scenario.hpp"

namespace ghgen {

/// Interactive session over one engine instance. Commands:
///   load <path>          load a scenario file and replay its dialogue
///   say <speaker> [id:topic|id:mention ...]   advance one turn
///   step                 advance one turn with no mentions
///   status <id>          print distribution and argmax status
///   buffers              print the three tier buffers
///   describe <id>        print the generated referring form
///   quit
/// Per-command errors are printed and the session continues.
class Repl {
 public:
  explicit Repl(RunConfig config);

  // Reads commands from `in` until quit/EOF; writes to `out`.
  void run(std::istream& in, std::ostream& out, bool prompt = true);

 private:
  bool dispatch(const std::string& line, std::ostream& out);

  RunConfig config_;
  WorldModel world_;
  CognitiveStatusEngine engine_;
};

}  // namespace ghgen
