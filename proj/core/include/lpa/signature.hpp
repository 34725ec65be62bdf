#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lpa {

// Largest supported generator count; blades are stored as 32-bit masks but
// 2^16 basis blades is already far beyond what dense tables can afford.
inline constexpr int kMaxGenerators = 16;

// Generator counts of G(p,q,r). Generators are ordered unipotent first
// ([0,p) square +1), then anti-unipotent ([p,p+q) square -1), then
// nilpotent ([p+q,p+q+r) square 0).
struct Signature {
  int p = 0;
  int q = 0;
  int r = 0;

  constexpr int dimension() const { return p + q + r; }

  constexpr int square(int index) const {
    if (index < p) return 1;
    if (index < p + q) return -1;
    return 0;
  }

  // Diagonal metric entry eta_{ii}; off-diagonal entries are zero.
  constexpr int metric(int i, int j) const { return i == j ? square(i) : 0; }

  bool valid() const {
    return p >= 0 && q >= 0 && r >= 0 && dimension() >= 1 &&
           dimension() <= kMaxGenerators;
  }

  std::string to_string() const;

  friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

// A basis blade, encoded as the bit mask of its (ascending) generator indices.
// The empty mask is the scalar blade.
struct Blade {
  std::uint32_t mask = 0;

  constexpr Blade() = default;
  constexpr explicit Blade(std::uint32_t m) : mask(m) {}

  static Blade from_indices(const std::vector<int>& ascending);

  constexpr int grade() const { return std::popcount(mask); }
  constexpr bool contains(int index) const { return (mask >> index) & 1U; }
  std::vector<int> indices() const;

  friend constexpr auto operator<=>(const Blade&, const Blade&) = default;
};

// Sign of the basis-blade product a*b: the transposition parity needed to
// bring the concatenated index lists into ascending order, times the squares
// of the repeated generators. Zero when a repeated generator is nilpotent.
constexpr int blade_product_sign(const Signature& sig, Blade a, Blade b) {
  // Only the parity of the swap count matters, and the parity of a sum of
  // popcounts is the parity of the XOR of the words.
  std::uint32_t acc = 0;
  for (std::uint32_t t = a.mask >> 1; t != 0; t >>= 1) acc ^= t & b.mask;
  acc ^= acc >> 16;
  acc ^= acc >> 8;
  acc ^= acc >> 4;
  acc ^= acc >> 2;
  acc ^= acc >> 1;
  int sign = (acc & 1U) ? -1 : 1;
  for (std::uint32_t common = a.mask & b.mask; common != 0; common &= common - 1) {
    sign *= sig.square(std::countr_zero(common));
    if (sign == 0) return 0;
  }
  return sign;
}

// Sign (-1)^{g(g-1)/2} applied by reversion to a grade-g blade.
constexpr int reverse_sign(int grade) { return ((grade * (grade - 1) / 2) & 1) ? -1 : 1; }

// Algebra handle: the signature plus its generator-square table.
class Algebra {
 public:
  explicit Algebra(Signature sig);

  const Signature& signature() const { return sig_; }
  int dimension() const { return sig_.dimension(); }
  std::size_t blade_count() const { return std::size_t{1} << sig_.dimension(); }
  int square(int index) const { return squares_[static_cast<std::size_t>(index)]; }
  const std::vector<int>& squares() const { return squares_; }
  Blade pseudoscalar_blade() const { return Blade{static_cast<std::uint32_t>(blade_count() - 1)}; }

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.sig_ == b.sig_; }

 private:
  Signature sig_;
  std::vector<int> squares_;
};

// Validates the signature; throws PreconditionError when p+q+r is zero,
// negative counts are given, or more than kMaxGenerators generators are requested.
Algebra make_algebra(Signature sig);

}  // namespace lpa
