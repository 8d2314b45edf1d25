#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "entmeas/commands.hpp"

namespace {

int run_file(entmeas::cli::Command command, const std::string& path,
             const entmeas::cli::Options& options) {
  using namespace entmeas::cli;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << kToolName << ": cannot read " << path << "\n";
    return kExitInput;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    std::cerr << kToolName << ": error while reading " << path << "\n";
    return kExitInput;
  }

  const Outcome outcome = run(command, buffer.str(), options);
  std::cout << outcome.report.dump() << "\n";
  if (options.summary) std::cerr << outcome.summary;
  if (outcome.report.contains("error")) {
    std::cerr << kToolName << ": " << outcome.report["error"].get<std::string>() << "\n";
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace entmeas::cli;
  CLI::App app{"Entangling quantum measurement toolkit", kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string input;
  std::string convention;
  bool summary = false;

  for (const char* name : {"validate", "measure", "spectrum", "transfer", "metrics"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input,-i", input, "Scenario file (JSON)")->required();
    sub->add_flag("--summary", summary, "Also print a human-readable table to stderr");
    sub->add_option("--convention", convention,
                    "Transfer index convention; both are reported when omitted")
        ->check(CLI::IsMember({"prose", "printed"}));
  }
  app.footer("Exit codes: 0 success, 1 validation or domain failure, 2 I/O or parse failure.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto* chosen = app.get_subcommands().front();
  const auto command = parse_command(chosen->get_name());
  Options options;
  options.summary = summary;
  if (!convention.empty()) options.convention = entmeas::parse_convention(convention);
  return run_file(*command, input, options);
}
