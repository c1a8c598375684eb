#pragma once

// Experiment configuration for the batch harness.
//
// Configs are JSON documents.  Every command has a complete default document
// (default_config); a user file and `key.path=value` overrides are merged on
// top of it.  Keys absent from the default document are rejected, so the
// defaults double as the schema.  The merged document is what gets echoed into
// result metadata, and feeding it back as a config reproduces the run.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "xtalk/coupling_scan.hpp"
#include "xtalk/mitigation.hpp"
#include "xtalk/protocols.hpp"
#include "xtalk/scenario.hpp"

namespace xtalk {

enum class Command { Scan, CoinFlip, Xor, Canary, Evolve };

std::string_view command_name(Command c);
Command command_from_name(std::string_view name);

nlohmann::json default_config(Command command);

struct ExperimentConfig {
  Command command = Command::Scan;
  /// Fully resolved document, defaults included.
  nlohmann::json resolved;
  std::uint64_t seed = 0;

  ScanGrid scan;
  CoinFlipExperiment coinflip;  // presets holds exactly the configured pair
  XorExperiment xor_sweep;

  CanaryConfig canary;
  bool canary_attack = true;
  AttackScenario canary_scenario;

  AttackScenario evolve_scenario;
};

/// Merges `file_text` (may be empty) and overrides onto the defaults for
/// `command` and decodes the result.  Throws ValidationError with a
/// dotted-path message on unknown keys, wrong types, or out-of-range values.
ExperimentConfig parse_config(Command command, std::string_view file_text,
                              const std::vector<std::string>& overrides = {});

}  // namespace xtalk
