#include "lpa/multivector.hpp"

#include <cmath>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

void check_blade(const Signature& sig, Blade blade) {
  if (sig.dimension() < 32 && (blade.mask >> sig.dimension()) != 0) {
    throw PreconditionError("blade " + std::to_string(blade.mask) + " is not in " +
                            sig.to_string());
  }
}

}  // namespace

Multivector::Multivector(Signature sig, TermMap terms) : sig_(sig), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& term) { return term.second == 0.0; });
}

Multivector::Multivector(Signature sig, std::initializer_list<std::pair<Blade, double>> terms)
    : sig_(sig) {
  for (const auto& [blade, value] : terms) add_to(blade, value);
}

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector out(sig);
  out.set(Blade{}, value);
  return out;
}

Multivector Multivector::basis_blade(Signature sig, Blade blade, double coefficient) {
  Multivector out(sig);
  out.set(blade, coefficient);
  return out;
}

Multivector Multivector::generator(Signature sig, int index, double coefficient) {
  if (index < 0 || index >= sig.dimension()) {
    throw PreconditionError("generator index " + std::to_string(index) + " out of range for " +
                            sig.to_string());
  }
  return basis_blade(sig, Blade{1U << index}, coefficient);
}

Multivector Multivector::vector(Signature sig, const std::vector<double>& coefficients) {
  if (coefficients.size() > static_cast<std::size_t>(sig.dimension())) {
    throw PreconditionError("too many vector coefficients for " + sig.to_string());
  }
  Multivector out(sig);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    out.set(Blade{1U << i}, coefficients[i]);
  }
  return out;
}

double Multivector::coefficient(Blade blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? 0.0 : it->second;
}

void Multivector::set(Blade blade, double value) {
  check_blade(sig_, blade);
  if (value == 0.0) {
    terms_.erase(blade);
  } else {
    terms_[blade] = value;
  }
}

void Multivector::add_to(Blade blade, double value) {
  check_blade(sig_, blade);
  if (value == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(blade, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0.0) terms_.erase(it);
  }
}

bool Multivector::is_grade(int g) const {
  for (const auto& [blade, value] : terms_) {
    if (blade.grade() != g) return false;
  }
  return true;
}

bool Multivector::is_even() const {
  for (const auto& [blade, value] : terms_) {
    if (blade.grade() % 2 != 0) return false;
  }
  return true;
}

std::uint32_t Multivector::grade_mask() const {
  std::uint32_t mask = 0;
  for (const auto& [blade, value] : terms_) mask |= 1U << blade.grade();
  return mask;
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (const auto& [blade, value] : terms_) m = std::max(m, std::fabs(value));
  return m;
}

std::vector<double> Multivector::vector_coefficients() const {
  if (!is_grade(1)) throw GradeError("vector_coefficients requires a grade-1 multivector");
  std::vector<double> out(static_cast<std::size_t>(sig_.dimension()), 0.0);
  for (const auto& [blade, value] : terms_) {
    out[static_cast<std::size_t>(std::countr_zero(blade.mask))] = value;
  }
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(*this);
  for (auto& [blade, value] : out.terms_) value = -value;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_algebra(*this, other, "addition");
  for (const auto& [blade, value] : other.terms_) add_to(blade, value);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_algebra(*this, other, "subtraction");
  for (const auto& [blade, value] : other.terms_) add_to(blade, -value);
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    it = (it->second == 0.0) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

double max_abs_difference(const Multivector& a, const Multivector& b) {
  return (a - b).max_abs();
}

void require_same_algebra(const Multivector& a, const Multivector& b, const char* op) {
  if (a.signature() != b.signature()) {
    throw AlgebraMismatch(std::string(op) + ": operands from " + a.signature().to_string() +
                          " and " + b.signature().to_string());
  }
}

}  // namespace lpa
