#pragma once

#include "lpa/multivector.hpp"

namespace lpa {

// Bilinear extension of the blade product.
Multivector geometric_product(const Multivector& a, const Multivector& b);

// Outer (wedge) product: grade r+s part of the product of the grade r and s parts.
Multivector outer(const Multivector& a, const Multivector& b);

// Symmetric vector dot, the scalar part of (ab + ba)/2. Both arguments must be grade 1.
double inner_vectors(const Multivector& a, const Multivector& b);

// Commutator product (ab - ba)/2.
Multivector commutator(const Multivector& a, const Multivector& b);

Multivector grade_select(const Multivector& a, int grade);
Multivector reverse(const Multivector& a);

Multivector pseudoscalar(const Algebra& alg);
Multivector pseudoscalar(Signature sig);
// a * I
Multivector right_mul_pseudoscalar(const Multivector& a);

// Left contraction of a vector into a multivector: grade-(g-1) part of v*x for each grade g.
Multivector vector_contraction(const Multivector& v, const Multivector& x);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}
inline Multivector operator^(const Multivector& a, const Multivector& b) { return outer(a, b); }

}  // namespace lpa
