#include "xtalk/mitigation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace xtalk {

ShotCounts sample_measurements(const Distribution& dist, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw ValidationError("sample_measurements: shots must be >= 1");
  const double p1 = std::clamp(dist.p1, 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::int64_t> draw(shots, p1);
  const std::int64_t ones = draw(rng);
  return {shots - ones, ones};
}

void CanaryConfig::validate() const {
  if (shots < 1) throw ValidationError("canary.shots must be >= 1");
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw ValidationError("canary.threshold must lie in (0, 1]");
  }
  if (!(lambda >= 0.0 && lambda <= std::numbers::pi / 2.0 + 1e-12)) {
    throw ValidationError("canary.lambda must lie in [0, pi/2]");
  }
}

DetectionVerdict canary_check(const CanaryConfig& config,
                              const std::optional<AttackScenario>& scenario) {
  config.validate();
  const VictimProgram canary{{GateKind::RotY, config.lambda}};
  Distribution dist;
  if (scenario) {
    AttackScenario s = *scenario;
    s.victim = canary;
    dist = marginal_probs(run_attacked(s), kVictimQubit);
  } else {
    dist = run_ideal(canary);
  }
  const auto counts = sample_measurements(dist, config.shots, config.seed);
  DetectionVerdict v;
  v.empirical_p1 = static_cast<double>(counts.count1) / static_cast<double>(config.shots);
  const double s = std::sin(config.lambda);
  v.ideal_p1 = s * s;
  v.deviation = std::abs(v.empirical_p1 - v.ideal_p1);
  v.flagged = v.deviation > config.threshold;
  return v;
}

ContainmentResult reset_and_contain(const AttackScenario& scenario) {
  if (scenario.timing != Timing::AttackerFirst) {
    throw ValidationError("reset_and_contain: scenario timing must be attacker_first");
  }
  scenario.validate();
  ContainmentResult out;
  out.before = influence(scenario);

  const auto h = attack_hamiltonian(scenario.coupling, scenario.pulse0, scenario.pulse1);
  const StateVector attacked = evolve(StateVector(), h, scenario.evolution).state;
  const StateVector reset = reset_qubit(attacked, kVictimQubit);
  out.post_reset = marginal_probs(reset, kVictimQubit);
  const StateVector final_state = apply_program(reset, scenario.victim);
  out.after.p_ideal = run_ideal(scenario.victim);
  out.after.p_attack = marginal_probs(final_state, kVictimQubit);
  out.after.norm = influence_norm(out.after.p_ideal, out.after.p_attack);

  AttackScenario late = scenario;
  late.timing = Timing::VictimFirst;
  out.victim_first = influence(late);
  return out;
}

}  // namespace xtalk
