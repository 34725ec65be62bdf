#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lpa/little_group.hpp"
#include "lpa/multivector.hpp"

namespace lpa {

// Reproducible random configurations. Draws come straight from
// std::mt19937_64 bits, so a seed gives the same stream on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  // Standard normal via Box-Muller.
  double normal();
  std::vector<double> unit_direction(int n);

  // Time generator plus a random unit spatial direction.
  Multivector lightlike(const Algebra& parent);
  // Coefficients uniform in [-range, range].
  Multivector vector(const Algebra& alg, double range = 2.0);
  // Random element of span{e1..e_{n-1}}.
  Multivector spatial_in_frame(const LittleAlgebra& la, double range = 2.0);
  // alpha + beta I; beta is drawn only when allow_pseudoscalar is set.
  Multivector theta(Signature sig, double range, bool allow_pseudoscalar);
  // G(1,3) potential a + bI; gauge-satisfying draws force a0 = a3 and b0 = b3.
  Multivector potential(bool satisfy_gauge, double range = 2.0);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Whether complex-like angles alpha + beta I give rotors for translations in
// this parent (true for G(1,3)).
bool supports_pseudoscalar_angle(Signature parent);

}  // namespace lpa
