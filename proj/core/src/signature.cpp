#include "lpa/signature.hpp"

#include "lpa/errors.hpp"

namespace lpa {

std::string Signature::to_string() const {
  std::string out = "G(" + std::to_string(p) + "," + std::to_string(q);
  if (r != 0) out += "," + std::to_string(r);
  return out + ")";
}

Blade Blade::from_indices(const std::vector<int>& ascending) {
  std::uint32_t mask = 0;
  int previous = -1;
  for (int i : ascending) {
    if (i <= previous || i >= kMaxGenerators) {
      throw PreconditionError("blade indices must be strictly ascending and below " +
                              std::to_string(kMaxGenerators));
    }
    mask |= 1U << i;
    previous = i;
  }
  return Blade{mask};
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(grade()));
  for (std::uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Algebra::Algebra(Signature sig) : sig_(sig) {
  squares_.reserve(static_cast<std::size_t>(sig.dimension()));
  for (int i = 0; i < sig.dimension(); ++i) squares_.push_back(sig.square(i));
}

Algebra make_algebra(Signature sig) {
  if (sig.p < 0 || sig.q < 0 || sig.r < 0) {
    throw PreconditionError("signature counts must be non-negative: " + sig.to_string());
  }
  if (sig.dimension() < 1) throw PreconditionError("signature needs at least one generator");
  if (sig.dimension() > kMaxGenerators) {
    throw PreconditionError("signature " + sig.to_string() + " exceeds " +
                            std::to_string(kMaxGenerators) + " generators");
  }
  return Algebra(sig);
}

}  // namespace lpa
