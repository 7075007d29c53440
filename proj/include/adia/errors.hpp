#pragma once

#include <stdexcept>
#include <string>

namespace adia {

/// Base class for every error raised by this library.  The CLI maps these to
/// machine-readable error JSON; the `kind()` tag is stable across releases.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Cost vector has the wrong length, or an index is out of range.
struct DimensionError : Error {
  explicit DimensionError(const std::string& msg) : Error("dimension", msg) {}
};

/// Marked entry is not exactly zero.
struct MarkedValueError : Error {
  explicit MarkedValueError(const std::string& msg) : Error("marked-value", msg) {}
};

/// A non-marked cost is zero or negative.
struct NegativeEntryError : Error {
  explicit NegativeEntryError(const std::string& msg) : Error("negative-entry", msg) {}
};

/// A cost exceeds the configured polynomial bound.
struct BoundError : Error {
  explicit BoundError(const std::string& msg) : Error("bound", msg) {}
};

/// Noise model parameters are inconsistent (empty interval, bad sigma, ...).
struct NoiseRangeError : Error {
  explicit NoiseRangeError(const std::string& msg) : Error("noise-range", msg) {}
};

/// Request falls outside the regime a bound is proven for.
struct UnsupportedRegimeError : Error {
  explicit UnsupportedRegimeError(const std::string& msg)
      : Error("unsupported-regime", msg) {}
};

/// An iterative solve (root find, quadrature, refinement) failed to converge.
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& msg) : Error("convergence", msg) {}
};

/// Evaluation point is too close to a pole of the secular function.
struct PoleProximityError : Error {
  explicit PoleProximityError(const std::string& msg)
      : Error("pole-proximity", msg) {}
};

/// Dense-path request above the size guard.
struct SizeGuardError : Error {
  explicit SizeGuardError(const std::string& msg) : Error("size-guard", msg) {}
};

/// Propagator lost unitarity beyond the accepted tolerance.
struct NormDriftError : Error {
  explicit NormDriftError(const std::string& msg) : Error("norm-drift", msg) {}
};

/// Envelope construction produced an empty or inverted plateau.
struct DegenerateEnvelopeError : Error {
  explicit DegenerateEnvelopeError(const std::string& msg)
      : Error("degenerate-envelope", msg) {}
};

/// Malformed config / instance file, unknown fields, unwritable output.
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("io", msg) {}
};

/// Invalid argument to a library entry point (grid too small, bad epsilon, ...).
struct ArgumentError : Error {
  explicit ArgumentError(const std::string& msg) : Error("argument", msg) {}
};

}  // namespace adia
