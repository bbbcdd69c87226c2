#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ghgen/repl.hpp"
#include "ghgen/scenario.hpp"

namespace {

ghgen::RunConfig loadConfigOrDefault(const std::string& path) {
  if (path.empty()) return {};
  return ghgen::loadConfig(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Givenness Hierarchy referring form generation"};
  app.require_subcommand(1);

  std::string scenarioPath;
  std::string configPath;
  std::string traceFormat = "tsv";

  auto* run = app.add_subcommand("run", "replay a scenario and emit a trace");
  run->add_option("--scenario", scenarioPath, "scenario file")->required();
  run->add_option("--config", configPath, "config file");
  run->add_option("--trace-format", traceFormat, "tsv or json-lines")
      ->check(CLI::IsMember({"tsv", "json-lines"}));

  auto* repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("--config", configPath, "config file");

  auto* check = app.add_subcommand("check", "validate a scenario file");
  check->add_option("--scenario", scenarioPath, "scenario file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      ghgen::RunConfig config = loadConfigOrDefault(configPath);
      ghgen::Scenario scenario = ghgen::loadScenario(scenarioPath);
      ghgen::TraceFormat format = traceFormat == "tsv"
                                      ? ghgen::TraceFormat::Tsv
                                      : ghgen::TraceFormat::JsonLines;
      ghgen::runBatch(scenario, config, format, std::cout);
    } else if (repl->parsed()) {
      ghgen::Repl session(loadConfigOrDefault(configPath));
      session.run(std::cin, std::cout);
    } else if (check->parsed()) {
      ghgen::loadScenario(scenarioPath);
      std::cout << "ok\n";
    }
  } catch (const ghgen::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const ghgen::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
