#include "xtalk/harness.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "xtalk/parallel.hpp"

namespace xtalk {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

ResultTable scan_table(const ExperimentConfig& cfg, int parallelism) {
  ResultTable t{{"coupling", "shape", "influence_norm"}, {}};
  for (const auto& r : run_scan(cfg.scan, parallelism)) {
    t.rows.push_back({r.coupling, r.shape, r.norm});
  }
  return t;
}

ResultTable coinflip_table(const ExperimentConfig& cfg, int parallelism) {
  const auto& exp = cfg.coinflip;
  const auto& preset = exp.presets.front();
  const auto early = coin_flip_curve(exp, preset, Timing::AttackerFirst, parallelism);
  const auto late = coin_flip_curve(exp, preset, Timing::VictimFirst, parallelism);
  ResultTable t{{"lambda_deg", "p_ideal", "p_attacker_first", "p_victim_first"}, {}};
  for (std::size_t i = 0; i < early.size(); ++i) {
    t.rows.push_back({early[i].lambda * kRadToDeg, early[i].p_ideal, early[i].p_attack,
                      late[i].p_attack});
  }
  return t;
}

ResultTable xor_table(const ExperimentConfig& cfg, int parallelism) {
  ResultTable t{{"amplitude", "max_deviation", "worst_input", "classification_ok"}, {}};
  for (const auto& p : xor_deviation_sweep(cfg.xor_sweep, parallelism)) {
    t.rows.push_back({p.amplitude, p.max_deviation, p.worst_input, p.classification_ok});
  }
  return t;
}

ResultTable canary_table(const ExperimentConfig& cfg) {
  std::optional<AttackScenario> scenario;
  if (cfg.canary_attack) scenario = cfg.canary_scenario;
  const auto v = canary_check(cfg.canary, scenario);
  ResultTable t{{"lambda_deg", "shots", "threshold", "empirical_p1", "ideal_p1", "deviation",
                 "flagged"},
                {}};
  t.rows.push_back({cfg.canary.lambda * kRadToDeg, cfg.canary.shots, cfg.canary.threshold,
                    v.empirical_p1, v.ideal_p1, v.deviation, v.flagged});
  return t;
}

ResultTable evolve_table(const ExperimentConfig& cfg) {
  const StateVector psi = run_attacked(cfg.evolve_scenario);
  ResultTable t{{"basis", "re", "im", "probability"}, {}};
  for (int i = 0; i < kDim; ++i) {
    std::string label;
    for (int q = 0; q < kNumQubits; ++q) label += ((i >> (kNumQubits - 1 - q)) & 1) ? '1' : '0';
    t.rows.push_back({label, psi[i].real(), psi[i].imag(), std::norm(psi[i])});
  }
  return t;
}

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, c);
}

nlohmann::json metadata(const ExperimentConfig& cfg) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", std::string(command_name(cfg.command))},
          {"seed", cfg.seed},
          {"config", cfg.resolved}};
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& config, int parallelism) {
  switch (config.command) {
    case Command::Scan: return scan_table(config, parallelism);
    case Command::CoinFlip: return coinflip_table(config, parallelism);
    case Command::Xor: return xor_table(config, parallelism);
    case Command::Canary: return canary_table(config);
    case Command::Evolve: return evolve_table(config);
  }
  return {};
}

bool has_plot_data(Command command) {
  return command == Command::CoinFlip || command == Command::Xor;
}

OutputFormat format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ValidationError("--format: expected csv or json, got '" + name + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ec == std::errc() ? end : buf);
}

std::string render_csv(const ExperimentConfig& config, const ResultTable& table) {
  std::ostringstream os;
  os << "# " << kToolName << ' ' << kToolVersion << '\n'
     << "# command: " << command_name(config.command) << '\n'
     << "# seed: " << config.seed << '\n'
     << "# config: " << config.resolved.dump() << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
  return os.str();
}

std::string render_json(const ExperimentConfig& config, const ResultTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
    rows.push_back(obj);
  }
  nlohmann::json doc = {{"metadata", metadata(config)},
                        {"columns", table.columns},
                        {"rows", rows}};
  return doc.dump(2) + "\n";
}

std::string render_plot_data(const ResultTable& table) {
  std::ostringstream os;
  os << '#';
  for (const auto& c : table.columns) os << ' ' << c;
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << cell_text(row[i]);
    os << '\n';
  }
  return os.str();
}

std::filesystem::path plot_data_path(const std::filesystem::path& out) {
  auto p = out;
  p += ".dat";
  return p;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << body;
  f.close();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void execute(const ExperimentConfig& config, const RunOptions& options) {
  if (options.parallelism < 1) throw ValidationError("--parallel must be >= 1");
  const ResultTable table = run_experiment(config, options.parallelism);
  write_file(options.out, options.format == OutputFormat::Csv ? render_csv(config, table)
                                                              : render_json(config, table));
  if (has_plot_data(config.command)) {
    write_file(plot_data_path(options.out), render_plot_data(table));
  }
}

}  // namespace xtalk
