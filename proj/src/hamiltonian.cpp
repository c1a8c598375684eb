#include "xtalk/hamiltonian.hpp"

#include <cmath>

namespace xtalk {

void CouplingSpec::validate() const {
  if (first == Pauli::I || second == Pauli::I) {
    throw ValidationError("coupling operators must be X, Y or Z");
  }
  if (!std::isfinite(j01) || !std::isfinite(j12)) {
    throw ValidationError("J01 and J12 must be finite");
  }
}

std::string CouplingSpec::label() const {
  return {pauli_letter(first), pauli_letter(second)};
}

CouplingSpec coupling_from_label(const std::string& label, double j01, double j12) {
  if (label.size() != 2) {
    throw ValidationError("coupling label '" + label + "' must be two Pauli letters");
  }
  CouplingSpec spec{pauli_from_letter(label[0]), pauli_from_letter(label[1]), j01, j12};
  spec.validate();
  return spec;
}

Matrix8 build_coupling(const CouplingSpec& spec) {
  spec.validate();
  const Matrix2 a = pauli(spec.first);
  const Matrix2 b = pauli(spec.second);
  return spec.j01 * embed_pair(a, b, 0, 1) + spec.j12 * embed_pair(a, b, 1, 2);
}

namespace {

const Matrix8& x_on(int qubit) {
  static const Matrix8 x0 = embed(pauli(Pauli::X), 0);
  static const Matrix8 x1 = embed(pauli(Pauli::X), 1);
  return qubit == 0 ? x0 : x1;
}

}  // namespace

Matrix8 build_drive(const PulseSpec& pulse0, const PulseSpec& pulse1, double t,
                    Approach approach) {
  return eval_pulse(pulse0, t, approach) * x_on(0) + eval_pulse(pulse1, t, approach) * x_on(1);
}

Matrix8 hamiltonian_at(const CouplingSpec& spec, const PulseSpec& pulse0,
                       const PulseSpec& pulse1, double t, Approach approach) {
  return build_coupling(spec) + build_drive(pulse0, pulse1, t, approach);
}

HamiltonianProvider constant_hamiltonian(const Matrix8& h) {
  return [h](double, Approach) { return h; };
}

HamiltonianProvider attack_hamiltonian(const CouplingSpec& spec, const PulseSpec& pulse0,
                                       const PulseSpec& pulse1) {
  pulse0.validate();
  pulse1.validate();
  return [coupling = build_coupling(spec), pulse0, pulse1](double t, Approach approach) {
    return Matrix8(coupling + build_drive(pulse0, pulse1, t, approach));
  };
}

}  // namespace xtalk
