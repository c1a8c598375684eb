#pragma once

// Attack experiments on the victim qubit q2.
//
// The attack window is one evolution over t in [0, 1] under the coupling plus
// attacker drive.  Victim gates are instantaneous and act on q2 only.  With
// AttackerFirst the window precedes the victim program (circuit node a), with
// VictimFirst it follows it (node b).  Measurement of q2 happens right after
// the last step in either case.

#include <string_view>
#include <vector>

#include "xtalk/evolution.hpp"
#include "xtalk/hamiltonian.hpp"
#include "xtalk/pulse.hpp"
#include "xtalk/quantum_core.hpp"

namespace xtalk {

inline constexpr int kVictimQubit = 2;

enum class Timing { AttackerFirst, VictimFirst };

std::string_view timing_name(Timing t);
Timing timing_from_name(std::string_view name);

enum class GateKind { Identity, RotY, Hadamard, RotZ, RotX };

std::string_view gate_name(GateKind g);
GateKind gate_from_name(std::string_view name);

/// One victim gate.  Angle conventions:
///   RotY(l) = exp(-i l Y)          (full angle, so P(1) = sin^2 l from |0>)
///   RotZ(t) = exp(-i t Z / 2),  RotX(t) = exp(-i t X / 2)
struct VictimGate {
  GateKind kind = GateKind::Identity;
  double angle = 0.0;
};

using VictimProgram = std::vector<VictimGate>;

Matrix2 gate_matrix(const VictimGate& gate);

StateVector apply_program(const StateVector& state, const VictimProgram& program);

struct AttackScenario {
  CouplingSpec coupling;
  PulseSpec pulse0;
  PulseSpec pulse1;
  Timing timing = Timing::AttackerFirst;
  VictimProgram victim;
  EvolutionConfig evolution;

  void validate() const;
};

/// What the attacked distribution is compared against.
///   Isolated      victim program alone on |000>, no coupling, no drive.
///   CouplingOnly  the same scenario with both pulses switched off.
enum class Baseline { Isolated, CouplingOnly };

std::string_view baseline_name(Baseline b);
Baseline baseline_from_name(std::string_view name);

struct InfluenceRecord {
  Distribution p_ideal;
  Distribution p_attack;
  double norm = 0.0;
};

/// L2 distance between two q2 distributions.
double influence_norm(const Distribution& ideal, const Distribution& attack);

Distribution run_ideal(const VictimProgram& victim);

/// Final 3-qubit state starting from |000>.
StateVector run_attacked(const AttackScenario& scenario);

InfluenceRecord influence(const AttackScenario& scenario,
                          Baseline baseline = Baseline::Isolated);

}  // namespace xtalk
