#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "xtalk/config.hpp"

namespace xtalk {

inline constexpr const char* kToolName = "xtalk";
inline constexpr const char* kToolVersion = "0.1.0";

using Cell = std::variant<double, std::int64_t, std::string, bool>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Evaluates the configured experiment.  Row order is fixed by the experiment
/// (sorted scan records, grid order otherwise) and independent of parallelism.
ResultTable run_experiment(const ExperimentConfig& config, int parallelism = 1);

/// Coinflip and xor tables are also emitted as whitespace-separated plot data.
bool has_plot_data(Command command);

enum class OutputFormat { Csv, Json };

OutputFormat format_from_name(const std::string& name);

/// 17 significant digits; round-trips through strtod.
std::string format_double(double v);

/// Metadata header followed by the table.
std::string render_csv(const ExperimentConfig& config, const ResultTable& table);
std::string render_json(const ExperimentConfig& config, const ResultTable& table);
std::string render_plot_data(const ResultTable& table);

struct RunOptions {
  std::filesystem::path out;
  OutputFormat format = OutputFormat::Csv;
  int parallelism = 1;
};

/// Plot data path: "<out>.dat".
std::filesystem::path plot_data_path(const std::filesystem::path& out);

/// Runs and writes the results file (and plot data where applicable).
/// Throws IoError when an output cannot be written.
void execute(const ExperimentConfig& config, const RunOptions& options);

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDrift = 3;
inline constexpr int kExitIo = 4;

}  // namespace xtalk
