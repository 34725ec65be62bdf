#pragma once

#include "lpa/multivector.hpp"

namespace lpa {

// Tolerance used when admitting a multivector as a rotor.
inline constexpr double kRotorNormTolerance = 1e-9;

// Even multivector R with R * reverse(R) == 1. Acts on multivectors by the
// sandwich x -> R x reverse(R).
class Rotor {
 public:
  // Throws GradeError for odd terms and RotorNormError when |R reverse(R) - 1| exceeds tol.
  static Rotor from_multivector(Multivector value, double tol = kRotorNormTolerance);
  static Rotor identity(Signature sig);

  const Multivector& value() const { return value_; }
  Multivector inverse() const;
  // Largest coefficient of R reverse(R) - 1.
  double norm_residual() const;

 private:
  explicit Rotor(Multivector value) : value_(std::move(value)) {}
  Multivector value_;
};

double rotor_norm_residual(const Multivector& value);

// exp(scale * B) for a grade-2 B. Closed forms when (scale*B)^2 is a scalar:
// cos/sin for negative squares, cosh/sinh for positive, 1 + X for null.
// Other bivectors fall back to straight power-series summation (at most 64 terms).
Rotor exp_bivector(const Multivector& bivector, double scale);

// R x reverse(R), restricted to the grades present in x (the action preserves
// grade, so other parts can only be rounding residue).
Multivector sandwich(const Rotor& rotor, const Multivector& x);

}  // namespace lpa
