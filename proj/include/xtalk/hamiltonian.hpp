#pragma once

#include <functional>
#include <string>

#include "xtalk/pulse.hpp"
#include "xtalk/quantum_core.hpp"

namespace xtalk {

/// Always-on crosstalk on the chain q0 - q1 - q2.  Both bonds carry the same
/// ordered Pauli pair:  J01 (first (x) second (x) I) + J12 (I (x) first (x) second).
struct CouplingSpec {
  Pauli first = Pauli::Y;
  Pauli second = Pauli::X;
  double j01 = 0.5;
  double j12 = 0.5;

  void validate() const;
  /// Two-letter label such as "YX".
  std::string label() const;
};

/// Parses a two-letter label ("YX", "zx") into first/second operators.
CouplingSpec coupling_from_label(const std::string& label, double j01, double j12);

Matrix8 build_coupling(const CouplingSpec& spec);

/// f0(t) X(q0) + f1(t) X(q1).  The victim qubit is never driven.
Matrix8 build_drive(const PulseSpec& pulse0, const PulseSpec& pulse1, double t,
                    Approach approach = Approach::Exact);

Matrix8 hamiltonian_at(const CouplingSpec& spec, const PulseSpec& pulse0,
                       const PulseSpec& pulse1, double t,
                       Approach approach = Approach::Exact);

/// Time-indexed Hamiltonian.  The approach argument lets integrators read
/// one-sided limits at step boundaries.
using HamiltonianProvider = std::function<Matrix8(double t, Approach approach)>;

HamiltonianProvider constant_hamiltonian(const Matrix8& h);

/// Provider for the attack Hamiltonian with the coupling matrix built once.
HamiltonianProvider attack_hamiltonian(const CouplingSpec& spec, const PulseSpec& pulse0,
                                       const PulseSpec& pulse1);

}  // namespace xtalk
