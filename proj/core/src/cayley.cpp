#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lpa/errors.hpp"
#include "lpa/little_group.hpp"
#include "lpa/products.hpp"

namespace lpa {

namespace {

struct SparseTerm {
  std::uint32_t mask;
  double weight;
};

// A null vector f with f.e0 = 1, f.f = 0 and f.e_i = 0: the reciprocal of e0.
Multivector reciprocal_of_e0(const LittleAlgebra& la) {
  const Signature sig = la.parent().signature();
  const Multivector& e0 = la.frame()[0];
  const Blade time{1U << la.layout().time_index};
  Multivector time_axis = Multivector::basis_blade(sig, time);
  Multivector spatial = e0 - time_axis * e0.coefficient(time);
  Multivector f = time_axis - spatial;
  return f * (1.0 / inner_vectors(f, e0));
}

}  // namespace

CayleyTable cayley_table(const LittleAlgebra& la) {
  const Signature sig = la.parent().signature();
  const int n = la.n();
  const std::size_t count = std::size_t{1} << n;
  const std::size_t parent_count = std::size_t{1} << sig.dimension();

  std::vector<Multivector> blades;
  blades.reserve(count);
  for (std::size_t a = 0; a < count; ++a) {
    blades.push_back(la.embedded_blade(Blade{static_cast<std::uint32_t>(a)}));
  }
  std::vector<double> dense_blades(count * parent_count, 0.0);
  for (std::size_t a = 0; a < count; ++a) {
    for (const auto& [blade, value] : blades[a].terms()) dense_blades[a * parent_count + blade.mask] = value;
  }

  // Reciprocal blades R_c with <reverse(R_c) E_b>_0 = delta_cb, stored with the
  // blade self-product sign folded in so a coordinate is a plain dot product.
  std::vector<Multivector> reciprocal_generators;
  const Multivector f = reciprocal_of_e0(la);
  for (int w = 0; w < n; ++w) {
    if (w == n - 1) {
      reciprocal_generators.push_back(f);
    } else {
      reciprocal_generators.push_back(la.embedded_generator(w) *
                                      (1.0 / la.spatial_square()));
    }
  }
  std::vector<std::vector<SparseTerm>> reciprocal(count);
  for (std::size_t c = 0; c < count; ++c) {
    Multivector r = Multivector::scalar(sig, 1.0);
    for (int w : Blade{static_cast<std::uint32_t>(c)}.indices()) {
      r = r * reciprocal_generators[static_cast<std::size_t>(w)];
    }
    r = reverse(r);
    for (const auto& [blade, value] : r.terms()) {
      const int self = blade_product_sign(sig, blade, blade);
      if (self != 0) reciprocal[c].push_back({blade.mask, value * self});
    }
  }

  CayleyTable table;
  table.n_ = n;
  table.coords_.assign(count * count * count, 0.0);
  // count^2 parent products dominate the cost, so they run on a dense kernel
  // with a precomputed sign table and plain accumulation instead of the
  // sparse product. Integer frames still come out exact.
  std::vector<std::int8_t> signs(parent_count * parent_count);
  for (std::size_t x = 0; x < parent_count; ++x) {
    for (std::size_t y = 0; y < parent_count; ++y) {
      signs[x * parent_count + y] = static_cast<std::int8_t>(blade_product_sign(
          sig, Blade{static_cast<std::uint32_t>(x)}, Blade{static_cast<std::uint32_t>(y)}));
    }
  }
  std::vector<std::vector<SparseTerm>> sparse_blades(count);
  for (std::size_t a = 0; a < count; ++a) {
    for (const auto& [blade, value] : blades[a].terms()) sparse_blades[a].push_back({blade.mask, value});
  }

  std::vector<double> product(parent_count, 0.0);
  std::vector<double> rebuilt(parent_count, 0.0);
  double closure = 0.0;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      std::fill(product.begin(), product.end(), 0.0);
      std::fill(rebuilt.begin(), rebuilt.end(), 0.0);
      for (const auto& x : sparse_blades[a]) {
        const std::int8_t* row = &signs[x.mask * parent_count];
        for (const auto& y : sparse_blades[b]) {
          const int sign = row[y.mask];
          if (sign != 0) product[x.mask ^ y.mask] += sign * (x.weight * y.weight);
        }
      }
      double* coords = &table.coords_[(a * count + b) * count];
      for (std::size_t c = 0; c < count; ++c) {
        double sum = 0.0;
        for (const auto& t : reciprocal[c]) sum += t.weight * product[t.mask];
        coords[c] = sum;
        if (sum == 0.0) continue;
        const double* column = &dense_blades[c * parent_count];
        for (std::size_t m = 0; m < parent_count; ++m) rebuilt[m] += sum * column[m];
      }
      for (std::size_t m = 0; m < parent_count; ++m) {
        closure = std::max(closure, std::fabs(rebuilt[m] - product[m]));
      }
    }
  }
  table.closure_residual_ = closure;
  return table;
}

CheckReport isomorphism_check(const LittleAlgebra& la, const CayleyTable& table, double tol) {
  const Signature ref = la.reference_signature();
  const std::size_t count = table.blade_count();
  double structure = 0.0;
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      const Blade ba{static_cast<std::uint32_t>(a)};
      const Blade bb{static_cast<std::uint32_t>(b)};
      const int sign = blade_product_sign(ref, ba, bb);
      const std::uint32_t target = ba.mask ^ bb.mask;
      for (std::size_t c = 0; c < count; ++c) {
        const double expected = (c == target) ? static_cast<double>(sign) : 0.0;
        const double got = table.coefficient(ba, bb, Blade{static_cast<std::uint32_t>(c)});
        structure = std::max(structure, std::fabs(got - expected));
      }
    }
  }
  CheckReport report(tol);
  report.add("pga inner table", "frame inner products", la.inner_table_residual());
  report.add("closure", "E_a E_b in span of W(k) blades", table.closure_residual());
  report.add("isomorphism", "W(k) table = " + ref.to_string() + " table", structure);
  return report;
}

CheckReport isomorphism_check(const LittleAlgebra& la, double tol) {
  return isomorphism_check(la, cayley_table(la), tol);
}

}  // namespace lpa
