#pragma once

// Dense linear algebra for a three-qubit register.
//
// Basis states are indexed |q0 q1 q2> with q0 as the most-significant bit, so
// index 1 is |001> (q2 excited) and index 4 is |100> (q0 excited).  All
// operators are dense; the Hilbert space is only 8-dimensional.

#include <array>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "xtalk/errors.hpp"

namespace xtalk {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;
using Vector8 = Eigen::Matrix<Complex, 8, 1>;

inline constexpr int kNumQubits = 3;
inline constexpr int kDim = 8;

enum class Pauli { I, X, Y, Z };

char pauli_letter(Pauli p);
Pauli pauli_from_letter(char c);

/// Standard 2x2 Pauli matrix.
Matrix2 pauli(Pauli kind);

/// Places `op` on `qubit` with identities elsewhere (q0 (x) q1 (x) q2).
Matrix8 embed(const Matrix2& op, int qubit);

/// opA (x) opB on an adjacent pair: first = 0 gives opA(x)opB(x)I,
/// first = 1 gives I(x)opA(x)opB.  Any other pair is rejected.
Matrix8 embed_pair(const Matrix2& op_a, const Matrix2& op_b, int first, int second);

template <int N>
bool is_hermitian(const Eigen::Matrix<Complex, N, N>& m, double tol = 1e-12) {
  return ((m - m.adjoint()).cwiseAbs().maxCoeff() <= tol);
}

template <int N>
bool is_unitary(const Eigen::Matrix<Complex, N, N>& m, double tol = 1e-9) {
  using M = Eigen::Matrix<Complex, N, N>;
  return ((m.adjoint() * m - M::Identity()).cwiseAbs().maxCoeff() <= tol);
}

/// exp(-i * scale * h) for Hermitian h.
///
/// Computed from the Hermitian eigendecomposition h = V diag(w) V^dagger as
/// V diag(exp(-i scale w)) V^dagger.  The result is unitary to rounding
/// error for any real scale, which scaling-and-squaring does not guarantee.
template <int N>
Eigen::Matrix<Complex, N, N> matrix_exp(const Eigen::Matrix<Complex, N, N>& h,
                                        double scale) {
  if (!is_hermitian(h)) {
    throw ValidationError("matrix_exp: input is not Hermitian within 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, N, N>> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("matrix_exp: eigendecomposition failed");
  }
  const auto& w = solver.eigenvalues();
  Eigen::Matrix<Complex, N, 1> phases;
  for (int i = 0; i < N; ++i) {
    phases(i) = std::exp(Complex(0.0, -scale * w(i)));
  }
  const auto& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

struct Distribution {
  double p0 = 1.0;
  double p1 = 0.0;
};

/// Normalized 8-amplitude pure state.  Immutable once built.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-9;

  /// |000>.
  StateVector();

  /// Throws ValidationError unless the norm is 1 within kNormTolerance or any
  /// amplitude is non-finite.
  explicit StateVector(const Vector8& amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static StateVector normalized(const Vector8& amplitudes);

  /// Computational basis state; index uses q0 as the most-significant bit.
  static StateVector basis(int index);

  const Vector8& amplitudes() const { return amps_; }
  Complex operator[](int i) const { return amps_(i); }
  double norm() const { return amps_.norm(); }

 private:
  Vector8 amps_;
};

/// Applies embed(gate, qubit).  Rejects gates that are not unitary within 1e-9.
StateVector apply_gate(const StateVector& state, const Matrix2& gate, int qubit);

/// Applies an arbitrary 8x8 unitary.
StateVector apply_unitary(const StateVector& state, const Matrix8& u);

Distribution marginal_probs(const StateVector& state, int qubit);

/// Projects `qubit` onto |0> and renormalizes.  When the |0> branch has no
/// weight the |1> branch is moved onto |0> instead.
StateVector reset_qubit(const StateVector& state, int qubit);

}  // namespace xtalk
