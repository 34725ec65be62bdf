#include "lpa/products.hpp"

#include <algorithm>
#include <cstdint>

#include "lpa/errors.hpp"
#include "lpa/exact_sum.hpp"

namespace lpa {

namespace {

using Contribution = std::pair<std::uint32_t, double>;

// Sums contributions per blade with correctly rounded summation so that
// cancelling products vanish exactly regardless of accumulation order.
Multivector collect(Signature sig, std::vector<Contribution>& contributions) {
  const std::size_t masks = std::size_t{1} << sig.dimension();
  if (masks <= 4 * contributions.size()) {
    // Counting sort by mask: linear, and stable, so the summation input is
    // deterministic (the result would not depend on order anyway).
    thread_local std::vector<std::uint32_t> offsets;
    thread_local std::vector<Contribution> sorted;
    offsets.assign(masks + 1, 0);
    for (const auto& c : contributions) ++offsets[c.first + 1];
    for (std::size_t m = 0; m < masks; ++m) offsets[m + 1] += offsets[m];
    sorted.resize(contributions.size());
    for (const auto& c : contributions) sorted[offsets[c.first]++] = c;
    contributions.swap(sorted);
  } else {
    std::stable_sort(contributions.begin(), contributions.end(),
                     [](const Contribution& a, const Contribution& b) { return a.first < b.first; });
  }
  Multivector::TermMap terms;
  ExactSum sum;
  for (std::size_t i = 0; i < contributions.size();) {
    const std::uint32_t mask = contributions[i].first;
    std::size_t j = i;
    double value;
    if (j + 1 == contributions.size() || contributions[j + 1].first != mask) {
      value = contributions[j].second;
      ++j;
    } else {
      sum.clear();
      for (; j < contributions.size() && contributions[j].first == mask; ++j) {
        sum.add(contributions[j].second);
      }
      value = sum.result();
    }
    if (value != 0.0) terms.emplace_hint(terms.end(), Blade{mask}, value);
    i = j;
  }
  return Multivector(sig, std::move(terms));
}

template <typename Keep>
Multivector product_filtered(const Multivector& a, const Multivector& b, Keep keep) {
  const Signature& sig = a.signature();
  std::vector<Contribution> contributions;
  contributions.reserve(a.size() * b.size());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if (!keep(ba, bb)) continue;
      const int sign = blade_product_sign(sig, ba, bb);
      if (sign == 0) continue;
      const double v = ca * cb;
      contributions.emplace_back(ba.mask ^ bb.mask, sign > 0 ? v : -v);
    }
  }
  return collect(sig, contributions);
}

}  // namespace

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same_algebra(a, b, "geometric_product");
  return product_filtered(a, b, [](Blade, Blade) { return true; });
}

Multivector outer(const Multivector& a, const Multivector& b) {
  require_same_algebra(a, b, "outer");
  // For blades with disjoint index sets the product is the single blade of
  // grade r+s; overlapping sets only produce lower grades.
  return product_filtered(a, b, [](Blade x, Blade y) { return (x.mask & y.mask) == 0; });
}

double inner_vectors(const Multivector& a, const Multivector& b) {
  require_same_algebra(a, b, "inner_vectors");
  if (!a.is_grade(1) || !b.is_grade(1)) {
    throw GradeError("inner_vectors requires two grade-1 multivectors");
  }
  const Signature& sig = a.signature();
  ExactSum sum;
  for (const auto& [blade, ca] : a.terms()) {
    const int square = sig.square(std::countr_zero(blade.mask));
    if (square == 0) continue;
    const double cb = b.coefficient(blade);
    if (cb == 0.0) continue;
    const double v = ca * cb;
    sum.add(square > 0 ? v : -v);
  }
  return sum.result();
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  require_same_algebra(a, b, "commutator");
  // Only anticommuting blade pairs contribute; each contributes its full
  // product once, so (ab - ba)/2 is assembled without a subtraction.
  const Signature& sig = a.signature();
  std::vector<Contribution> contributions;
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const int ab = blade_product_sign(sig, ba, bb);
      if (ab == 0) continue;
      const int ba_sign = blade_product_sign(sig, bb, ba);
      if (ab == ba_sign) continue;
      const double v = ca * cb;
      contributions.emplace_back(ba.mask ^ bb.mask, ab > 0 ? v : -v);
    }
  }
  return collect(sig, contributions);
}

Multivector grade_select(const Multivector& a, int grade) {
  if (grade < 0 || grade > a.signature().dimension()) {
    throw GradeError("grade " + std::to_string(grade) + " outside 0.." +
                     std::to_string(a.signature().dimension()));
  }
  Multivector out(a.signature());
  for (const auto& [blade, value] : a.terms()) {
    if (blade.grade() == grade) out.set(blade, value);
  }
  return out;
}

Multivector reverse(const Multivector& a) {
  Multivector out(a.signature());
  for (const auto& [blade, value] : a.terms()) {
    out.set(blade, reverse_sign(blade.grade()) * value);
  }
  return out;
}

Multivector pseudoscalar(Signature sig) {
  return Multivector::basis_blade(sig, Blade{static_cast<std::uint32_t>((1ULL << sig.dimension()) - 1)});
}

Multivector pseudoscalar(const Algebra& alg) { return pseudoscalar(alg.signature()); }

Multivector right_mul_pseudoscalar(const Multivector& a) {
  return geometric_product(a, pseudoscalar(a.signature()));
}

Multivector vector_contraction(const Multivector& v, const Multivector& x) {
  require_same_algebra(v, x, "vector_contraction");
  if (!v.is_grade(1)) throw GradeError("vector_contraction requires a grade-1 left operand");
  return product_filtered(v, x, [](Blade e, Blade b) { return (e.mask & b.mask) != 0; });
}

}  // namespace lpa
