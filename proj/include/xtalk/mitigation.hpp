#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>

#include "xtalk/scenario.hpp"

namespace xtalk {

struct ShotCounts {
  std::int64_t count0 = 0;
  std::int64_t count1 = 0;
};

/// Seeded binomial draw of `shots` measurements from `dist`.
ShotCounts sample_measurements(const Distribution& dist, std::int64_t shots, std::uint64_t seed);

struct CanaryConfig {
  double lambda = std::numbers::pi / 4.0;
  std::int64_t shots = 4096;
  double threshold = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

struct DetectionVerdict {
  double empirical_p1 = 0.0;
  double ideal_p1 = 0.0;
  double deviation = 0.0;
  bool flagged = false;
};

/// Runs the coin-flip canary RotY(lambda) on q2 either clean (no scenario) or
/// inside `scenario` (its victim program is replaced by the canary), samples
/// shots and flags |empirical P(1) - sin^2 lambda| > threshold.
DetectionVerdict canary_check(const CanaryConfig& config,
                              const std::optional<AttackScenario>& scenario);

struct ContainmentResult {
  InfluenceRecord before;
  InfluenceRecord after;
  /// The same pulses injected after the victim program, for comparison.
  InfluenceRecord victim_first;
  /// q2 marginal right after the reset.
  Distribution post_reset;
};

/// Attacker-first scenario with and without a reset of q2 between the attack
/// window and the victim program.  Attacker qubits keep their post-attack
/// state.
ContainmentResult reset_and_contain(const AttackScenario& scenario);

}  // namespace xtalk
