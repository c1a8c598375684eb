#include "xtalk/config.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "xtalk/harness.hpp"

using namespace xtalk;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string validation_message(Command cmd, std::string_view text,
                               const std::vector<std::string>& overrides) {
  try {
    parse_config(cmd, text, overrides);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Config, EmptyScanConfigUsesFullGrid) {
  const auto cfg = parse_config(Command::Scan, "");
  EXPECT_EQ(cfg.scan.coupling_types.size(), 2u);
  EXPECT_EQ(cfg.scan.shapes.size(), 5u);
  EXPECT_EQ(cfg.scan.evolution.steps, 50);
  EXPECT_EQ(cfg.scan.evolution.substeps_per_step, 4);
  EXPECT_EQ(run_experiment(cfg).rows.size(), 10u);
}

TEST(Config, OverridesReachTheModel) {
  const auto cfg = parse_config(Command::Evolve, "",
                                {"pulse0.shape=chirp", "pulse0.c=0", "coupling.type=ZX",
                                 "coupling.J12=0.25", "evolution.steps=20", "seed=7"});
  EXPECT_EQ(cfg.evolve_scenario.pulse0.shape, PulseShape::Chirp);
  EXPECT_EQ(cfg.evolve_scenario.pulse0.chirp_rate, 0.0);
  EXPECT_EQ(cfg.evolve_scenario.coupling.label(), "ZX");
  EXPECT_EQ(cfg.evolve_scenario.coupling.j12, 0.25);
  EXPECT_EQ(cfg.evolve_scenario.evolution.steps, 20);
  EXPECT_EQ(cfg.seed, 7u);
}

TEST(Config, ChirpWithZeroRateMatchesCosineEndToEnd) {
  const auto chirp = parse_config(Command::Evolve, "", {"pulse0.shape=chirp", "pulse0.c=0"});
  const auto cosine = parse_config(Command::Evolve, "", {"pulse0.shape=cosine"});
  const auto a = run_experiment(chirp);
  const auto b = run_experiment(cosine);
  ASSERT_EQ(a.rows.size(), 8u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_NEAR(std::get<double>(a.rows[i][3]), std::get<double>(b.rows[i][3]), 1e-12);
  }
}

TEST(Config, FileAndOverrideLayering) {
  const auto cfg = parse_config(Command::CoinFlip, R"({"coupling": {"J01": 0.3}})",
                                {"coupling.J12=0.2"});
  EXPECT_EQ(cfg.coinflip.coupling.j01, 0.3);
  EXPECT_EQ(cfg.coinflip.coupling.j12, 0.2);
  EXPECT_EQ(cfg.resolved["coupling"]["J01"], 0.3);
}

TEST(Config, RejectsBadNumberWithFieldName) {
  const auto msg = validation_message(Command::Scan, "", {"coupling.J01=abc"});
  EXPECT_NE(msg.find("coupling.J01"), std::string::npos) << msg;
  EXPECT_NE(msg.find("abc"), std::string::npos) << msg;
}

TEST(Config, RejectsUnknownKeys) {
  EXPECT_NE(validation_message(Command::Scan, R"({"couplng": {}})", {}).find("couplng"),
            std::string::npos);
  EXPECT_NE(validation_message(Command::Scan, "", {"scan.shapez=x"}).find("scan.shapez"),
            std::string::npos);
  EXPECT_NE(validation_message(Command::Scan, R"({"coupling": {"J01": "big"}})", {})
                .find("coupling.J01"),
            std::string::npos);
}

TEST(Config, RejectsOutOfRangeValues) {
  EXPECT_NE(validation_message(Command::Scan, "", {"scan.scanned_pulse.sigma=0"}).find("sigma"),
            std::string::npos);
  EXPECT_NE(validation_message(Command::CoinFlip, "", {"pulse0.A=-1"}).find("pulse0.A"),
            std::string::npos);
  EXPECT_NE(validation_message(Command::Canary, "", {"canary.threshold=0"}).find("threshold"),
            std::string::npos);
  EXPECT_NE(validation_message(Command::Evolve, "", {"evolution.steps=0"}).find("evolution.steps"),
            std::string::npos);
  EXPECT_NE(validation_message(Command::Scan, "", {"coupling.J01"}).find("key=value"),
            std::string::npos);
  EXPECT_FALSE(validation_message(Command::Scan, "{not json", {}).empty());
}

TEST(Config, ResolvedDocumentReproducesRun) {
  const auto cfg = parse_config(Command::Xor, "", {"xor.amplitude_points=5", "pulse1.c=3"});
  const auto again = parse_config(Command::Xor, cfg.resolved.dump());
  EXPECT_EQ(cfg.resolved, again.resolved);
  EXPECT_EQ(render_csv(cfg, run_experiment(cfg)), render_csv(again, run_experiment(again)));
}

TEST(Config, XorSweepHasOneRowPerAmplitude) {
  const auto table = run_experiment(parse_config(Command::Xor, ""));
  EXPECT_EQ(table.rows.size(), 21u);
  EXPECT_EQ(table.columns.front(), "amplitude");
}

TEST(Harness, CsvIsDeterministicAcrossParallelism) {
  const auto cfg = parse_config(Command::Scan, "");
  EXPECT_EQ(render_csv(cfg, run_experiment(cfg, 1)), render_csv(cfg, run_experiment(cfg, 8)));
  const auto coin = parse_config(Command::CoinFlip, "");
  EXPECT_EQ(render_csv(coin, run_experiment(coin, 1)), render_csv(coin, run_experiment(coin, 4)));
}

TEST(Harness, CsvHeaderCarriesMetadata) {
  const auto cfg = parse_config(Command::Canary, "", {"seed=3"});
  const auto csv = render_csv(cfg, run_experiment(cfg));
  EXPECT_EQ(csv.rfind("# xtalk 0.1.0\n# command: canary\n# seed: 3\n# config: {", 0), 0u);
  EXPECT_NE(csv.find("\nlambda_deg,shots,threshold,empirical_p1,ideal_p1,deviation,flagged\n"),
            std::string::npos);
}

TEST(Harness, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 0.30003420894807448, 1e-300, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Harness, ExecuteWritesResultsAndPlotData) {
  const fs::path dir = fs::temp_directory_path() / "xtalk_config_test";
  fs::create_directories(dir);
  const auto cfg = parse_config(Command::CoinFlip, "", {"coinflip.lambda_points=5"});
  execute(cfg, {dir / "coin.json", OutputFormat::Json, 2});
  const auto doc = nlohmann::json::parse(read_file(dir / "coin.json"));
  EXPECT_EQ(doc["metadata"]["command"], "coinflip");
  EXPECT_EQ(doc["rows"].size(), 5u);
  EXPECT_EQ(doc["metadata"]["config"], cfg.resolved);
  ASSERT_TRUE(fs::exists(plot_data_path(dir / "coin.json")));
  EXPECT_NE(read_file(plot_data_path(dir / "coin.json")).find('\n'), std::string::npos);

  const auto scan = parse_config(Command::Scan, "", {"scan.shapes=[\"square\"]"});
  execute(scan, {dir / "scan.csv", OutputFormat::Csv, 1});
  EXPECT_FALSE(fs::exists(plot_data_path(dir / "scan.csv")));
  fs::remove_all(dir);
}

TEST(Harness, ExecuteReportsUnwritablePath) {
  const auto cfg = parse_config(Command::Scan, "", {"scan.shapes=[\"square\"]"});
  EXPECT_THROW(execute(cfg, {"/nonexistent-dir/out.csv", OutputFormat::Csv, 1}), IoError);
}
