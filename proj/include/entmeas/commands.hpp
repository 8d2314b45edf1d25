#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "entmeas/scenario.hpp"
#include "entmeas/transfer_experiment.hpp"

namespace entmeas::cli {

inline constexpr const char* kToolName = "entmeas";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Command { kValidate, kMeasure, kSpectrum, kTransfer, kMetrics };

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitInput = 2 };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command c);

struct Options {
  std::optional<Convention> convention;  // transfer: restrict to one convention
  bool summary = false;
};

struct Outcome {
  nlohmann::json report;
  std::string summary;  // human-readable table, filled when Options::summary
  int exit_code = kExitOk;
};

/// FNV-1a 64-bit digest, hex encoded with an "fnv1a64:" prefix.
std::string digest(std::string_view bytes);

/// Runs one command on the raw file contents. Never throws: parse failures
/// give exit 2, domain failures exit 1, both with an "error" field in the report.
Outcome run(Command command, const std::string& file_text, const Options& options = {});

}  // namespace entmeas::cli
