#include "xtalk/evolution.hpp"

#include <cmath>
#include <string>

namespace xtalk {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::RungeKutta4: return "rk4";
    case Method::PiecewiseExponential: return "piecewise_exp";
  }
  return "?";
}

Method method_from_name(std::string_view name) {
  if (name == "rk4") return Method::RungeKutta4;
  if (name == "piecewise_exp") return Method::PiecewiseExponential;
  throw ValidationError("unknown evolution method '" + std::string(name) +
                        "' (expected rk4 or piecewise_exp)");
}

void EvolutionConfig::validate() const {
  if (steps < 1) throw ValidationError("evolution.steps must be >= 1");
  if (substeps_per_step < 1) throw ValidationError("evolution.substeps must be >= 1");
}

namespace {

Matrix8 sample(const HamiltonianProvider& hamiltonian, double t, Approach approach) {
  Matrix8 h = hamiltonian(t, approach);
  if (!is_hermitian(h)) {
    throw ValidationError("evolve: H(t=" + std::to_string(t) + ") is not Hermitian");
  }
  return h;
}

const Complex kMinusI(0.0, -1.0);

Vector8 rk4(const Vector8& psi0, const HamiltonianProvider& hamiltonian, int n) {
  const double h = 1.0 / n;
  Vector8 psi = psi0;
  for (int k = 0; k < n; ++k) {
    // Node times are formed as ratios so that 0.3 and 0.7 land exactly.
    const double t0 = static_cast<double>(k) / n;
    const double tm = (k + 0.5) / n;
    const double t1 = static_cast<double>(k + 1) / n;
    const Matrix8 h0 = sample(hamiltonian, t0, Approach::FromAbove);
    const Matrix8 hm = sample(hamiltonian, tm, Approach::Exact);
    const Matrix8 h1 = sample(hamiltonian, t1, Approach::FromBelow);
    const Vector8 k1 = kMinusI * (h0 * psi);
    const Vector8 k2 = kMinusI * (hm * (psi + 0.5 * h * k1));
    const Vector8 k3 = kMinusI * (hm * (psi + 0.5 * h * k2));
    const Vector8 k4 = kMinusI * (h1 * (psi + h * k3));
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

Vector8 midpoint_exponential(const Vector8& psi0, const HamiltonianProvider& hamiltonian,
                             int n) {
  const double h = 1.0 / n;
  Vector8 psi = psi0;
  for (int k = 0; k < n; ++k) {
    const double tm = (k + 0.5) / n;
    psi = matrix_exp(sample(hamiltonian, tm, Approach::Exact), h) * psi;
  }
  return psi;
}

}  // namespace

EvolutionResult evolve(const StateVector& state, const HamiltonianProvider& hamiltonian,
                       const EvolutionConfig& config) {
  config.validate();
  const int n = config.intervals();
  const Vector8 out = config.method == Method::RungeKutta4
                          ? rk4(state.amplitudes(), hamiltonian, n)
                          : midpoint_exponential(state.amplitudes(), hamiltonian, n);
  if (!out.allFinite()) {
    throw DriftError("evolve: non-finite amplitude", INFINITY);
  }
  const double drift = std::abs(out.norm() - 1.0);
  if (drift > kMaxNormDrift) {
    throw DriftError("evolve: norm drift " + std::to_string(drift) + " exceeds 1e-6", drift);
  }
  return {StateVector::normalized(out), drift};
}

StateVector evolve_oracle(const StateVector& state, const HamiltonianProvider& hamiltonian,
                          int steps) {
  if (steps < 1) throw ValidationError("evolve_oracle: steps must be >= 1");
  return StateVector::normalized(midpoint_exponential(state.amplitudes(), hamiltonian, steps));
}

}  // namespace xtalk
