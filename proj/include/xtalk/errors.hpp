#pragma once

#include <stdexcept>
#include <string>

namespace xtalk {

/// Invalid input: bad parameter, malformed config, out-of-range index.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine could not produce a trustworthy result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrator norm drift beyond tolerance.
class DriftError : public NumericalError {
 public:
  DriftError(const std::string& what, double drift)
      : NumericalError(what), drift_(drift) {}
  double drift() const { return drift_; }

 private:
  double drift_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xtalk
