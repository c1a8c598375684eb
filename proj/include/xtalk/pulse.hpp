#pragma once

#include <string>
#include <string_view>

namespace xtalk {

enum class PulseShape { Off, Cosine, Gaussian, Square, Chirp, Drag };

std::string_view shape_name(PulseShape shape);
/// Accepts the names produced by shape_name (case-insensitive).
PulseShape shape_from_name(std::string_view name);

/// Drive envelope on one attacker qubit, in normalized time t in [0, 1].
///
///   Cosine    A cos(delta t)
///   Gaussian  A G(t),  G(t) = exp(-(t - 0.5)^2 / (2 sigma^2))
///   Square    A on 0.3 <= t <= 0.7, 0 elsewhere
///   Chirp     A cos((delta + c t) t)
///   DRAG      A [G(t) - alpha (t - 0.5) / sigma^2 G(t)]
///
/// The amplitude lives here; the drive Hamiltonian does not multiply by it
/// again.
struct PulseSpec {
  PulseShape shape = PulseShape::Off;
  double amplitude = 0.0;
  double detuning = 0.0;
  double width = 0.1;
  double chirp_rate = 5.0;
  double drag_alpha = 0.05;

  /// Throws ValidationError for A < 0, non-finite fields, or width <= 0 on
  /// Gaussian/DRAG.
  void validate() const;
};

inline constexpr double kSquareStart = 0.3;
inline constexpr double kSquareStop = 0.7;

/// Which side a discontinuous envelope is read from.  Only Square has jumps;
/// `FromBelow` at 0.3 and `FromAbove` at 0.7 give 0.
enum class Approach { Exact, FromAbove, FromBelow };

double eval_pulse(const PulseSpec& spec, double t, Approach approach = Approach::Exact);

}  // namespace xtalk
