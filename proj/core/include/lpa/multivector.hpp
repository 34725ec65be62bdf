#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "lpa/signature.hpp"

namespace lpa {

// Sparse multivector: a finite map from basis blades to nonzero coefficients.
// Zero coefficients are never stored, so two multivectors are equal iff their
// term maps are equal.
class Multivector {
 public:
  using TermMap = std::map<Blade, double>;

  explicit Multivector(Signature sig) : sig_(sig) {}
  explicit Multivector(const Algebra& alg) : sig_(alg.signature()) {}
  Multivector(Signature sig, std::initializer_list<std::pair<Blade, double>> terms);
  // Takes a term map as is after dropping zero coefficients.
  Multivector(Signature sig, TermMap terms);

  static Multivector scalar(Signature sig, double value);
  static Multivector basis_blade(Signature sig, Blade blade, double coefficient = 1.0);
  static Multivector generator(Signature sig, int index, double coefficient = 1.0);
  // Grade-1 element sum_i coefficients[i] * e_i.
  static Multivector vector(Signature sig, const std::vector<double>& coefficients);

  const Signature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double coefficient(Blade blade) const;
  double scalar_part() const { return coefficient(Blade{}); }
  // Sets a coefficient; assigning 0 erases the term.
  void set(Blade blade, double value);
  void add_to(Blade blade, double value);

  // True when every term has grade g (the zero multivector is homogeneous of every grade).
  bool is_grade(int g) const;
  bool is_even() const;
  // Bit set of grades present, bit g set when grade g occurs.
  std::uint32_t grade_mask() const;
  double max_abs() const;

  // Coefficients of a grade-1 element, indexed by generator.
  std::vector<double> vector_coefficients() const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

 private:
  Signature sig_;
  TermMap terms_;
};

// Largest absolute coefficient of a - b.
double max_abs_difference(const Multivector& a, const Multivector& b);

// Throws AlgebraMismatch unless both operands share a signature.
void require_same_algebra(const Multivector& a, const Multivector& b, const char* op);

}  // namespace lpa
