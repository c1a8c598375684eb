#pragma once

// Victim-side case studies: the biased coin flip RotY(lambda)|0> and the
// single-qubit XOR classifier H, RotZ((2 x1 - 1) pi/2), RotX((2 x2 - 1) pi/2).

#include <string>
#include <vector>

#include "xtalk/scenario.hpp"

namespace xtalk {

/// Named pair of attacker pulses.
struct AttackPreset {
  std::string name;
  PulseSpec pulse0;
  PulseSpec pulse1;
};

/// Cosine on both attacker qubits, A0 = A1 = 0.5.
AttackPreset moderate_preset();
/// Cosine on q0 and chirp on q1, A0 = A1 = 1.0.
AttackPreset aggressive_preset();

/// `count` equally spaced angles over [0, pi/2], endpoints included.
std::vector<double> default_lambda_grid(int count = 31);

struct CoinFlipExperiment {
  std::vector<double> lambda_grid = default_lambda_grid();
  CouplingSpec coupling;  // Y(x)X, J01 = J12 = 0.5
  EvolutionConfig evolution;
  std::vector<AttackPreset> presets{moderate_preset(), aggressive_preset()};

  void validate() const;
};

struct CoinFlipPoint {
  double lambda = 0.0;
  double p_ideal = 0.0;   // sin^2 lambda
  double p_attack = 0.0;  // attacked P(q2 = 1)
};

AttackScenario coin_flip_scenario(const CoinFlipExperiment& exp, const AttackPreset& preset,
                                  Timing timing, double lambda);

std::vector<CoinFlipPoint> coin_flip_curve(const CoinFlipExperiment& exp,
                                           const AttackPreset& preset, Timing timing,
                                           int parallelism = 1);

VictimProgram xor_program(int x1, int x2);

Distribution xor_classify_ideal(int x1, int x2);

struct XorExperiment {
  std::vector<double> amplitude_grid = [] {
    std::vector<double> g(21);
    for (int i = 0; i < 21; ++i) g[i] = i / 20.0;
    return g;
  }();
  CouplingSpec coupling;
  /// Shape parameters of the attack; amplitudes are overwritten per grid point.
  PulseSpec pulse0{PulseShape::Cosine, 1.0};
  PulseSpec pulse1{PulseShape::Chirp, 1.0};
  std::vector<Timing> timings{Timing::AttackerFirst, Timing::VictimFirst};
  Baseline baseline = Baseline::CouplingOnly;
  EvolutionConfig evolution;

  void validate() const;
};

struct XorPoint {
  double amplitude = 0.0;
  double max_deviation = 0.0;
  /// Input pair (x1, x2) attaining max_deviation, as the bit string "x1x2".
  std::string worst_input;
  /// Attacked argmax equals x1 xor x2 for every input and timing.
  bool classification_ok = true;
};

AttackScenario xor_scenario(const XorExperiment& exp, double amplitude, Timing timing, int x1,
                            int x2);

std::vector<XorPoint> xor_deviation_sweep(const XorExperiment& exp, int parallelism = 1);

}  // namespace xtalk
