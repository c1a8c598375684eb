#include "xtalk/scenario.hpp"

#include <cmath>
#include <string>

namespace xtalk {

std::string_view timing_name(Timing t) {
  return t == Timing::AttackerFirst ? "attacker_first" : "victim_first";
}

Timing timing_from_name(std::string_view name) {
  if (name == "attacker_first") return Timing::AttackerFirst;
  if (name == "victim_first") return Timing::VictimFirst;
  throw ValidationError("unknown timing '" + std::string(name) +
                        "' (expected attacker_first or victim_first)");
}

std::string_view gate_name(GateKind g) {
  switch (g) {
    case GateKind::Identity: return "id";
    case GateKind::RotY: return "ry";
    case GateKind::Hadamard: return "h";
    case GateKind::RotZ: return "rz";
    case GateKind::RotX: return "rx";
  }
  return "?";
}

GateKind gate_from_name(std::string_view name) {
  for (auto g : {GateKind::Identity, GateKind::RotY, GateKind::Hadamard, GateKind::RotZ,
                 GateKind::RotX}) {
    if (name == gate_name(g)) return g;
  }
  throw ValidationError("unknown victim gate '" + std::string(name) +
                        "' (expected id, ry, h, rz or rx)");
}

std::string_view baseline_name(Baseline b) {
  return b == Baseline::Isolated ? "isolated" : "coupling_only";
}

Baseline baseline_from_name(std::string_view name) {
  if (name == "isolated") return Baseline::Isolated;
  if (name == "coupling_only") return Baseline::CouplingOnly;
  throw ValidationError("unknown baseline '" + std::string(name) +
                        "' (expected isolated or coupling_only)");
}

Matrix2 gate_matrix(const VictimGate& gate) {
  if (!std::isfinite(gate.angle)) throw ValidationError("victim gate: non-finite angle");
  switch (gate.kind) {
    case GateKind::Identity:
      return Matrix2::Identity();
    case GateKind::RotY:
      return matrix_exp(pauli(Pauli::Y), gate.angle);
    case GateKind::Hadamard: {
      Matrix2 h;
      h << 1, 1, 1, -1;
      return h / std::sqrt(2.0);
    }
    case GateKind::RotZ:
      return matrix_exp(pauli(Pauli::Z), gate.angle / 2.0);
    case GateKind::RotX:
      return matrix_exp(pauli(Pauli::X), gate.angle / 2.0);
  }
  return Matrix2::Identity();
}

StateVector apply_program(const StateVector& state, const VictimProgram& program) {
  StateVector out = state;
  for (const auto& g : program) out = apply_gate(out, gate_matrix(g), kVictimQubit);
  return out;
}

void AttackScenario::validate() const {
  coupling.validate();
  pulse0.validate();
  pulse1.validate();
  evolution.validate();
}

double influence_norm(const Distribution& ideal, const Distribution& attack) {
  const double d0 = attack.p0 - ideal.p0;
  const double d1 = attack.p1 - ideal.p1;
  return std::sqrt(d0 * d0 + d1 * d1);
}

Distribution run_ideal(const VictimProgram& victim) {
  return marginal_probs(apply_program(StateVector(), victim), kVictimQubit);
}

StateVector run_attacked(const AttackScenario& scenario) {
  scenario.validate();
  const auto h = attack_hamiltonian(scenario.coupling, scenario.pulse0, scenario.pulse1);
  StateVector psi;
  if (scenario.timing == Timing::VictimFirst) psi = apply_program(psi, scenario.victim);
  psi = evolve(psi, h, scenario.evolution).state;
  if (scenario.timing == Timing::AttackerFirst) psi = apply_program(psi, scenario.victim);
  return psi;
}

InfluenceRecord influence(const AttackScenario& scenario, Baseline baseline) {
  InfluenceRecord rec;
  if (baseline == Baseline::Isolated) {
    rec.p_ideal = run_ideal(scenario.victim);
  } else {
    AttackScenario quiet = scenario;
    quiet.pulse0.shape = PulseShape::Off;
    quiet.pulse1.shape = PulseShape::Off;
    rec.p_ideal = marginal_probs(run_attacked(quiet), kVictimQubit);
  }
  rec.p_attack = marginal_probs(run_attacked(scenario), kVictimQubit);
  rec.norm = influence_norm(rec.p_ideal, rec.p_attack);
  return rec;
}

}  // namespace xtalk
