#include "xtalk/quantum_core.hpp"

#include <cmath>
#include <string>

namespace xtalk {

namespace {

void check_qubit(int qubit, const char* where) {
  if (qubit < 0 || qubit >= kNumQubits) {
    throw ValidationError(std::string(where) + ": qubit index " +
                          std::to_string(qubit) + " out of range 0..2");
  }
}

// Bit position of `qubit` inside a basis index.
constexpr int bit_of(int qubit) { return kNumQubits - 1 - qubit; }

}  // namespace

char pauli_letter(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_letter(char c) {
  switch (c) {
    case 'I': case 'i': return Pauli::I;
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default:
      throw ValidationError(std::string("unknown Pauli operator '") + c + "'");
  }
}

Matrix2 pauli(Pauli kind) {
  Matrix2 m;
  switch (kind) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix8 embed(const Matrix2& op, int qubit) {
  check_qubit(qubit, "embed");
  const int shift = bit_of(qubit);
  const int mask = 1 << shift;
  Matrix8 out = Matrix8::Zero();
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) {
      // Identity on the other qubits.
      if ((r & ~mask) != (c & ~mask)) continue;
      out(r, c) = op((r >> shift) & 1, (c >> shift) & 1);
    }
  }
  return out;
}

Matrix8 embed_pair(const Matrix2& op_a, const Matrix2& op_b, int first, int second) {
  if (!((first == 0 && second == 1) || (first == 1 && second == 2))) {
    throw ValidationError("embed_pair: pair (" + std::to_string(first) + "," +
                          std::to_string(second) + ") is not an adjacent chain bond");
  }
  return embed(op_a, first) * embed(op_b, second);
}

StateVector::StateVector() : amps_(Vector8::Zero()) { amps_(0) = 1.0; }

StateVector::StateVector(const Vector8& amplitudes) : amps_(amplitudes) {
  if (!amps_.allFinite()) {
    throw ValidationError("StateVector: non-finite amplitude");
  }
  if (std::abs(amps_.norm() - 1.0) > kNormTolerance) {
    throw ValidationError("StateVector: norm " + std::to_string(amps_.norm()) +
                          " differs from 1");
  }
}

StateVector StateVector::normalized(const Vector8& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ValidationError("StateVector::normalized: zero or non-finite vector");
  }
  return StateVector(amplitudes / n);
}

StateVector StateVector::basis(int index) {
  if (index < 0 || index >= kDim) {
    throw ValidationError("StateVector::basis: index out of range 0..7");
  }
  Vector8 v = Vector8::Zero();
  v(index) = 1.0;
  return StateVector(v);
}

StateVector apply_gate(const StateVector& state, const Matrix2& gate, int qubit) {
  if (!is_unitary(gate)) {
    throw ValidationError("apply_gate: gate is not unitary within 1e-9");
  }
  return StateVector(embed(gate, qubit) * state.amplitudes());
}

StateVector apply_unitary(const StateVector& state, const Matrix8& u) {
  if (!is_unitary(u)) {
    throw ValidationError("apply_unitary: operator is not unitary within 1e-9");
  }
  return StateVector(u * state.amplitudes());
}

Distribution marginal_probs(const StateVector& state, int qubit) {
  check_qubit(qubit, "marginal_probs");
  const int shift = bit_of(qubit);
  double p0 = 0.0;
  double p1 = 0.0;
  for (int i = 0; i < kDim; ++i) {
    const double w = std::norm(state[i]);
    if ((i >> shift) & 1) {
      p1 += w;
    } else {
      p0 += w;
    }
  }
  const double total = p0 + p1;
  return {p0 / total, p1 / total};
}

StateVector reset_qubit(const StateVector& state, int qubit) {
  check_qubit(qubit, "reset_qubit");
  const int mask = 1 << bit_of(qubit);
  Vector8 kept = Vector8::Zero();
  for (int i = 0; i < kDim; ++i) {
    if (!(i & mask)) kept(i) = state[i];
  }
  if (kept.norm() > 1e-12) return StateVector::normalized(kept);
  for (int i = 0; i < kDim; ++i) {
    if (i & mask) kept(i & ~mask) = state[i];
  }
  return StateVector::normalized(kept);
}

}  // namespace xtalk
