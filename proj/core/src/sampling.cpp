#include "lpa/sampling.hpp"

#include <cmath>
#include <numbers>

#include "lpa/products.hpp"

namespace lpa {

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

double Sampler::normal() {
  double u1 = uniform(0.0, 1.0);
  while (u1 == 0.0) u1 = uniform(0.0, 1.0);
  const double u2 = uniform(0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> Sampler::unit_direction(int n) {
  std::vector<double> d(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : d) {
      x = normal();
      norm2 += x * x;
    }
  } while (norm2 < 1e-12);
  const double norm = std::sqrt(norm2);
  for (double& x : d) x /= norm;
  return d;
}

Multivector Sampler::lightlike(const Algebra& parent) {
  const MinkowskiLayout layout = minkowski_layout(parent.signature());
  const std::vector<double> d = unit_direction(layout.spatial_dimension());
  Multivector k = Multivector::generator(parent.signature(), layout.time_index);
  for (std::size_t j = 0; j < d.size(); ++j) {
    k.set(Blade{1U << layout.space_indices[j]}, d[j]);
  }
  return k;
}

Multivector Sampler::vector(const Algebra& alg, double range) {
  std::vector<double> c(static_cast<std::size_t>(alg.dimension()));
  for (double& x : c) x = uniform(-range, range);
  return Multivector::vector(alg.signature(), c);
}

Multivector Sampler::spatial_in_frame(const LittleAlgebra& la, double range) {
  Multivector s(la.parent().signature());
  for (int i = 1; i < la.n(); ++i) {
    s += la.frame()[static_cast<std::size_t>(i)] * uniform(-range, range);
  }
  return s;
}

Multivector Sampler::theta(Signature sig, double range, bool allow_pseudoscalar) {
  const double alpha = uniform(-range, range);
  const double beta = allow_pseudoscalar ? uniform(-range, range) : 0.0;
  return complex_like(sig, alpha, beta);
}

Multivector Sampler::potential(bool satisfy_gauge, double range) {
  std::array<double, 4> a{}, b{};
  for (auto& x : a) x = uniform(-range, range);
  for (auto& x : b) x = uniform(-range, range);
  if (satisfy_gauge) {
    a[3] = a[0];
    b[3] = b[0];
  }
  return make_potential(a, b);
}

bool supports_pseudoscalar_angle(Signature parent) { return parent == Signature{1, 3, 0}; }

}  // namespace lpa
