#include "lpa/rotor.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "lpa/errors.hpp"
#include "lpa/products.hpp"

namespace lpa {

namespace {

constexpr double kNullTolerance = 1e-12;
constexpr double kSeriesTermTolerance = 1e-14;
constexpr int kSeriesTermCap = 64;

double squared_norm(const Multivector& x) {
  double s = 0.0;
  for (const auto& [blade, value] : x.terms()) s += value * value;
  return s;
}

}  // namespace

double rotor_norm_residual(const Multivector& value) {
  Multivector n = geometric_product(value, reverse(value));
  n -= Multivector::scalar(value.signature(), 1.0);
  return n.max_abs();
}

Rotor Rotor::from_multivector(Multivector value, double tol) {
  if (!value.is_even()) throw GradeError("rotor must be an even multivector");
  const double residual = rotor_norm_residual(value);
  if (!(residual <= tol)) {
    throw RotorNormError("rotor norm residual " + std::to_string(residual) +
                         " exceeds " + std::to_string(tol));
  }
  return Rotor(std::move(value));
}

Rotor Rotor::identity(Signature sig) { return Rotor(Multivector::scalar(sig, 1.0)); }

Multivector Rotor::inverse() const { return reverse(value_); }

double Rotor::norm_residual() const { return rotor_norm_residual(value_); }

Rotor exp_bivector(const Multivector& bivector, double scale) {
  if (!bivector.is_grade(2)) throw GradeError("exp_bivector requires a grade-2 multivector");
  const Signature sig = bivector.signature();
  const Multivector x = bivector * scale;
  if (x.is_zero()) return Rotor::identity(sig);

  const Multivector square = geometric_product(x, x);
  const double scale2 = std::max(1.0, squared_norm(x));
  const double s = square.scalar_part();
  const bool scalar_square =
      (square - Multivector::scalar(sig, s)).max_abs() <= kNullTolerance * scale2;

  if (scalar_square) {
    if (std::fabs(s) <= kNullTolerance * scale2) {
      return Rotor::from_multivector(Multivector::scalar(sig, 1.0) + x);
    }
    const double lambda = std::sqrt(std::fabs(s));
    if (s < 0.0) {
      return Rotor::from_multivector(Multivector::scalar(sig, std::cos(lambda)) +
                                     x * (std::sin(lambda) / lambda));
    }
    return Rotor::from_multivector(Multivector::scalar(sig, std::cosh(lambda)) +
                                   x * (std::sinh(lambda) / lambda));
  }

  Multivector sum = Multivector::scalar(sig, 1.0);
  Multivector term = Multivector::scalar(sig, 1.0);
  for (int k = 1; k <= kSeriesTermCap; ++k) {
    term = geometric_product(term, x) * (1.0 / k);
    sum += term;
    if (term.max_abs() < kSeriesTermTolerance) return Rotor::from_multivector(std::move(sum));
  }
  throw ConvergenceError("exp_bivector series did not converge within " +
                         std::to_string(kSeriesTermCap) + " terms");
}

Multivector sandwich(const Rotor& rotor, const Multivector& x) {
  require_same_algebra(rotor.value(), x, "sandwich");
  const Multivector raw = geometric_product(geometric_product(rotor.value(), x), rotor.inverse());
  // R x R~ maps each grade to itself; anything else is rounding residue.
  const std::uint32_t grades = x.grade_mask();
  Multivector out(x.signature());
  for (const auto& [blade, value] : raw.terms()) {
    if ((grades >> blade.grade()) & 1U) out.set(blade, value);
  }
  return out;
}

}  // namespace lpa
