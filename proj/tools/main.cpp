#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qaut/cli.hpp"
#include "qaut/dsl.hpp"

namespace {

std::string summary_line(const qaut::ReportEntry& e) {
  std::string line = qaut::to_string(e.report.verdict) + "  " + e.report.check;
  if (!e.required) line += "  (informational)";
  if (!e.report.witness_label.empty()) line += "  [" + e.report.witness_label + "]";
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of quantum automorphism group presentations"};
  app.set_version_flag("--version", qaut::tool_version());
  qaut::RunConfig cfg;
  std::string json_path;
  std::string commands;
  for (const std::string& c : qaut::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", cfg.command, "One of: " + commands)->required();
  app.add_option("input", cfg.input_path, "Presentation DSL file");
  app.add_option("--dsl", cfg.dsl, "Inline presentation DSL instead of a file");
  app.add_option("--degree-cap", cfg.limits.degree_cap, "Completion degree cap")->capture_default_str();
  app.add_option("--rule-cap", cfg.limits.rule_cap, "Completion rule budget")->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Numeric tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for every randomized check")->capture_default_str();
  app.add_option("--json", json_path, "Write the JSON report here instead of stdout");
  app.add_option("--trace", cfg.trace_path, "Write derived rewrite rules as JSONL");
  app.add_flag("--timings", cfg.timings, "Record elapsed_ms per entry (breaks byte-identical output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const qaut::Report report = qaut::run(cfg);
    const std::string text = report.to_json().dump(2) + "\n";
    if (json_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(json_path);
      if (!out) {
        std::cerr << "error: cannot write " << json_path << "\n";
        return 1;
      }
      out << text;
      for (const qaut::ReportEntry& e : report.entries) std::cout << summary_line(e) << "\n";
      std::cout << "overall: " << qaut::to_string(report.overall()) << "\n";
    }
    return report.exit_code();
  } catch (const qaut::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const qaut::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
