// Batch driver: xtalk <scan|coinflip|xor|canary|evolve> [options]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xtalk/harness.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string out;
  std::string format = "csv";
  std::vector<std::string> sets;
  int parallel = 1;
  std::optional<std::int64_t> seed;
  std::optional<int> steps;
  std::optional<int> substeps;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--out", f.out, "Results file")->required();
  cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--set", f.sets, "Override key.path=value (repeatable)");
  cmd->add_option("--parallel", f.parallel, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Seed for sampled quantities");
  cmd->add_option("--steps", f.steps, "Time-grid steps");
  cmd->add_option("--substeps", f.substeps, "Integrator substeps per step");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw xtalk::IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-level crosstalk attack simulator"};
  app.set_version_flag("--version", std::string(xtalk::kToolVersion));
  app.require_subcommand(1);

  Flags flags;
  const std::vector<std::pair<const char*, const char*>> commands{
      {"scan", "Coupling type x pulse shape influence scan"},
      {"coinflip", "Biased coin flip under attacker-first and victim-first injection"},
      {"xor", "XOR classifier deviation versus attack amplitude"},
      {"canary", "Canary-circuit attack detection"},
      {"evolve", "Final state of a single attack scenario"}};
  for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : xtalk::kExitValidation;
  }

  try {
    const auto command = xtalk::command_from_name(app.get_subcommands().front()->get_name());
    std::vector<std::string> overrides = flags.sets;
    if (flags.seed) overrides.push_back("seed=" + std::to_string(*flags.seed));
    if (flags.steps) overrides.push_back("evolution.steps=" + std::to_string(*flags.steps));
    if (flags.substeps) overrides.push_back("evolution.substeps=" + std::to_string(*flags.substeps));
    const std::string text = flags.config_path.empty() ? "" : read_file(flags.config_path);
    const auto config = xtalk::parse_config(command, text, overrides);
    xtalk::execute(config, {flags.out, xtalk::format_from_name(flags.format), flags.parallel});
  } catch (const xtalk::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return xtalk::kExitValidation;
  } catch (const xtalk::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return xtalk::kExitDrift;
  } catch (const xtalk::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return xtalk::kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return xtalk::kExitOk;
}
