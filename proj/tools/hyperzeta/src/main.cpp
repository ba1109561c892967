#include <fstream>
#include <iostream>

#ifdef HYPERZETA_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "hyperzeta_cli/app.hpp"

namespace cli = hyperzeta::cli;

namespace {

int write_output(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return cli::kExitOk;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "hyperzeta: cannot write " << *path << "\n";
    return cli::kExitInvalidInput;
  }
  return cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-field hypergeometric sums and zeta functions"};
  std::vector<std::string> commands = cli::known_commands();
  commands.push_back("selftest");

  std::string command;
  std::string job_path;
  unsigned D = 0;
  std::uint64_t budget = 0;
  std::string output;
  bool no_timestamp = false;
  app.add_option("command", command, "Operation to run")->required()->check(CLI::IsMember(commands));
  auto* job_opt = app.add_option("--job", job_path, "JSON job file");
  auto* d_opt = app.add_option("--D", D, "Truncation degree (overrides the job)")->check(CLI::Range(1, 64));
  auto* budget_opt = app.add_option("--budget", budget, "Evaluation budget per enumeration (overrides the job)");
  auto* out_opt = app.add_option("--output", output, "Write the report here instead of stdout");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp and timings (byte-identical reports)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitInvalidInput;
  }

  std::optional<std::string> out_path;
  if (*out_opt) out_path = output;

  if (command == "selftest") {
    const auto r = cli::selftest(!no_timestamp);
    std::cout << r.table;
    if (out_path && write_output(cli::render(r.report), out_path) != cli::kExitOk) return cli::kExitInvalidInput;
    return r.exit_code;
  }

  if (!*job_opt) {
    std::cerr << "hyperzeta: --job is required for " << command << "\n";
    return cli::kExitInvalidInput;
  }
  cli::Overrides ov;
  if (*d_opt) ov.D = D;
  if (*budget_opt) ov.budget = budget;
  ov.timestamp = !no_timestamp;

  const auto outcome = cli::run_file(command, job_path, ov);
  if (!out_path) {
    const auto& input = outcome.report["input"];
    if (input.is_object() && input.contains("output") && input["output"].is_string())
      out_path = input["output"].get<std::string>();
  }
  if (outcome.report.contains("error")) std::cerr << "hyperzeta: " << outcome.report["error"]["reason"].get<std::string>() << "\n";
  if (write_output(cli::render(outcome.report), out_path) != cli::kExitOk) return cli::kExitInvalidInput;
  return outcome.exit_code;
}
