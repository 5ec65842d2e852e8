#pragma once

// Command dispatcher and JSON report for the qaut tool.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qaut/report.hpp"
#include "qaut/rewrite.hpp"

namespace qaut {

inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

/// Bad command or input that is not a parse error (exit code 1).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  /// DSL file; ignored when `dsl` is set.
  std::string input_path;
  std::string dsl;
  CompletionLimits limits;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
  /// JSONL sink for derived rules of the main completion; empty for none.
  std::string trace_path;
  /// Adds elapsed_ms to every entry. Off by default so reports are byte-stable.
  bool timings = false;
};

struct ReportEntry {
  StructureReport report;
  bool required = true;
  nlohmann::json values = nlohmann::json::object();
  double elapsed_ms = 0.0;
};

struct Report {
  nlohmann::json config;
  nlohmann::json presentation;
  nlohmann::json system;
  std::vector<ReportEntry> entries;
  std::vector<std::string> notes;
  bool timings = false;

  /// Pass only if every required entry passes.
  Verdict overall() const;
  /// 0 pass, 2 some required Fail, 3 some required Inconclusive and no Fail.
  int exit_code() const;
  nlohmann::json to_json() const;
  const ReportEntry* find(const std::string& check) const;
};

const std::vector<std::string>& command_names();

/// Throws UsageError or ParseError; module errors propagate.
Report run(const RunConfig& cfg);

}  // namespace qaut
