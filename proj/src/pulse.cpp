#include "xtalk/pulse.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "xtalk/errors.hpp"

namespace xtalk {

std::string_view shape_name(PulseShape shape) {
  switch (shape) {
    case PulseShape::Off: return "off";
    case PulseShape::Cosine: return "cosine";
    case PulseShape::Gaussian: return "gaussian";
    case PulseShape::Square: return "square";
    case PulseShape::Chirp: return "chirp";
    case PulseShape::Drag: return "drag";
  }
  return "?";
}

PulseShape shape_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto s : {PulseShape::Off, PulseShape::Cosine, PulseShape::Gaussian,
                 PulseShape::Square, PulseShape::Chirp, PulseShape::Drag}) {
    if (lower == shape_name(s)) return s;
  }
  if (lower == "cos") return PulseShape::Cosine;
  throw ValidationError("unknown pulse shape '" + std::string(name) + "'");
}

void PulseSpec::validate() const {
  for (double v : {amplitude, detuning, width, chirp_rate, drag_alpha}) {
    if (!std::isfinite(v)) throw ValidationError("non-finite pulse parameter");
  }
  if (amplitude < 0.0) {
    throw ValidationError("A must be >= 0");
  }
  if ((shape == PulseShape::Gaussian || shape == PulseShape::Drag) && !(width > 0.0)) {
    throw ValidationError("sigma must be > 0 for gaussian and drag shapes");
  }
}

double eval_pulse(const PulseSpec& spec, double t, Approach approach) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw ValidationError("eval_pulse: t=" + std::to_string(t) + " outside [0, 1]");
  }
  const double a = spec.amplitude;
  const auto gaussian = [&] {
    const double x = t - 0.5;
    return std::exp(-(x * x) / (2.0 * spec.width * spec.width));
  };
  switch (spec.shape) {
    case PulseShape::Off:
      return 0.0;
    case PulseShape::Cosine:
      return a * std::cos(spec.detuning * t);
    case PulseShape::Gaussian:
      return a * gaussian();
    case PulseShape::Square:
      if (t == kSquareStart && approach == Approach::FromBelow) return 0.0;
      if (t == kSquareStop && approach == Approach::FromAbove) return 0.0;
      return (t >= kSquareStart && t <= kSquareStop) ? a : 0.0;
    case PulseShape::Chirp:
      return a * std::cos((spec.detuning + spec.chirp_rate * t) * t);
    case PulseShape::Drag: {
      const double g = gaussian();
      const double s2 = spec.width * spec.width;
      return a * (g - spec.drag_alpha * (t - 0.5) / s2 * g);
    }
  }
  return 0.0;
}

}  // namespace xtalk
