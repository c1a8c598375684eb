#pragma once

#include <string_view>

#include "xtalk/hamiltonian.hpp"
#include "xtalk/quantum_core.hpp"

namespace xtalk {

enum class Method { RungeKutta4, PiecewiseExponential };

std::string_view method_name(Method m);
Method method_from_name(std::string_view name);

/// Integration of i d/dt psi = H(t) psi over t in [0, 1] (hbar = 1) on a
/// uniform grid of steps * substeps_per_step intervals.
struct EvolutionConfig {
  int steps = 50;
  int substeps_per_step = 4;
  Method method = Method::RungeKutta4;

  void validate() const;
  int intervals() const { return steps * substeps_per_step; }
};

inline constexpr double kMaxNormDrift = 1e-6;

struct EvolutionResult {
  StateVector state;
  /// |norm - 1| before renormalization.
  double norm_drift = 0.0;
};

/// Evolves `state` from t=0 to t=1 and renormalizes.  RK4 reads H at the
/// exact stage times, taking one-sided limits at interval ends so envelopes
/// with jumps on grid nodes are integrated piece by piece.
///
/// Throws DriftError if the norm drift exceeds kMaxNormDrift and
/// ValidationError if a sampled H(t) is not Hermitian.
EvolutionResult evolve(const StateVector& state, const HamiltonianProvider& hamiltonian,
                       const EvolutionConfig& config = {});

/// Midpoint piecewise-constant propagation: product over `steps` equal
/// intervals of exp(-i H(t_mid) dt).  Independent of the RK4 path.
StateVector evolve_oracle(const StateVector& state, const HamiltonianProvider& hamiltonian,
                          int steps);

}  // namespace xtalk
