#include "xtalk/protocols.hpp"

#include <cmath>
#include <numbers>

#include "xtalk/parallel.hpp"

namespace xtalk {

AttackPreset moderate_preset() {
  return {"moderate", {PulseShape::Cosine, 0.5}, {PulseShape::Cosine, 0.5}};
}

AttackPreset aggressive_preset() {
  return {"aggressive", {PulseShape::Cosine, 1.0}, {PulseShape::Chirp, 1.0}};
}

std::vector<double> default_lambda_grid(int count) {
  if (count < 1) throw ValidationError("lambda grid needs at least one point");
  std::vector<double> grid(count);
  if (count == 1) return {0.0};
  for (int i = 0; i < count; ++i) grid[i] = (std::numbers::pi / 2.0) * (static_cast<double>(i) / (count - 1));
  return grid;
}

void CoinFlipExperiment::validate() const {
  if (lambda_grid.empty()) throw ValidationError("coinflip.lambda grid must not be empty");
  for (double l : lambda_grid) {
    if (!(l >= 0.0 && l <= std::numbers::pi / 2.0 + 1e-12)) {
      throw ValidationError("coinflip: lambda outside [0, pi/2]");
    }
  }
  coupling.validate();
  evolution.validate();
}

AttackScenario coin_flip_scenario(const CoinFlipExperiment& exp, const AttackPreset& preset,
                                  Timing timing, double lambda) {
  return {exp.coupling, preset.pulse0, preset.pulse1, timing,
          {{GateKind::RotY, lambda}}, exp.evolution};
}

std::vector<CoinFlipPoint> coin_flip_curve(const CoinFlipExperiment& exp,
                                           const AttackPreset& preset, Timing timing,
                                           int parallelism) {
  exp.validate();
  return parallel_map(exp.lambda_grid.size(), parallelism, [&](std::size_t i) {
    const double lambda = exp.lambda_grid[i];
    const auto scenario = coin_flip_scenario(exp, preset, timing, lambda);
    const double attacked = marginal_probs(run_attacked(scenario), kVictimQubit).p1;
    const double s = std::sin(lambda);
    return CoinFlipPoint{lambda, s * s, attacked};
  });
}

VictimProgram xor_program(int x1, int x2) {
  if ((x1 != 0 && x1 != 1) || (x2 != 0 && x2 != 1)) {
    throw ValidationError("xor inputs must be bits");
  }
  const double half_pi = std::numbers::pi / 2.0;
  return {{GateKind::Hadamard, 0.0},
          {GateKind::RotZ, (2 * x1 - 1) * half_pi},
          {GateKind::RotX, (2 * x2 - 1) * half_pi}};
}

Distribution xor_classify_ideal(int x1, int x2) { return run_ideal(xor_program(x1, x2)); }

void XorExperiment::validate() const {
  if (amplitude_grid.empty()) throw ValidationError("xor.amplitude grid must not be empty");
  if (timings.empty()) throw ValidationError("xor: at least one timing required");
  for (double a : amplitude_grid) {
    if (!(a >= 0.0) || !std::isfinite(a)) throw ValidationError("xor: amplitude must be >= 0");
  }
  coupling.validate();
  pulse0.validate();
  pulse1.validate();
  evolution.validate();
}

AttackScenario xor_scenario(const XorExperiment& exp, double amplitude, Timing timing, int x1,
                            int x2) {
  AttackScenario s{exp.coupling, exp.pulse0, exp.pulse1, timing, xor_program(x1, x2),
                   exp.evolution};
  s.pulse0.amplitude = amplitude;
  s.pulse1.amplitude = amplitude;
  return s;
}

std::vector<XorPoint> xor_deviation_sweep(const XorExperiment& exp, int parallelism) {
  exp.validate();
  return parallel_map(exp.amplitude_grid.size(), parallelism, [&](std::size_t i) {
    XorPoint pt;
    pt.amplitude = exp.amplitude_grid[i];
    pt.worst_input = "00";
    for (int x1 = 0; x1 <= 1; ++x1) {
      for (int x2 = 0; x2 <= 1; ++x2) {
        for (Timing timing : exp.timings) {
          const auto rec = influence(xor_scenario(exp, pt.amplitude, timing, x1, x2),
                                     exp.baseline);
          if (rec.norm > pt.max_deviation) {
            pt.max_deviation = rec.norm;
            pt.worst_input = {static_cast<char>('0' + x1), static_cast<char>('0' + x2)};
          }
          const int predicted = rec.p_attack.p1 > rec.p_attack.p0 ? 1 : 0;
          if (predicted != (x1 ^ x2)) pt.classification_ok = false;
        }
      }
    }
    return pt;
  });
}

}  // namespace xtalk
