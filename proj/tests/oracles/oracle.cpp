#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace oracle {

std::vector<int> squares(int p, int q, int r) {
  std::vector<int> out;
  out.insert(out.end(), static_cast<std::size_t>(p), 1);
  out.insert(out.end(), static_cast<std::size_t>(q), -1);
  out.insert(out.end(), static_cast<std::size_t>(r), 0);
  return out;
}

BladeProduct reduce(const std::vector<int>& sq, std::vector<int> symbols) {
  BladeProduct out;
  for (std::size_t pass = 0; pass < symbols.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i) {
      if (symbols[i] > symbols[i + 1]) {
        std::swap(symbols[i], symbols[i + 1]);
        out.sign = -out.sign;
      }
    }
  }
  std::vector<int> kept;
  for (std::size_t i = 0; i < symbols.size();) {
    if (i + 1 < symbols.size() && symbols[i] == symbols[i + 1]) {
      out.sign *= sq[static_cast<std::size_t>(symbols[i])];
      i += 2;
    } else {
      kept.push_back(symbols[i]);
      ++i;
    }
  }
  for (int s : kept) out.mask |= 1U << s;
  if (out.sign == 0) out.mask = 0;
  return out;
}

namespace {

std::vector<int> indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1U << i)) out.push_back(i);
  return out;
}

}  // namespace

BladeProduct blade_product(const std::vector<int>& sq, std::uint32_t a, std::uint32_t b) {
  std::vector<int> symbols = indices(a);
  const std::vector<int> rhs = indices(b);
  symbols.insert(symbols.end(), rhs.begin(), rhs.end());
  return reduce(sq, symbols);
}

Dense dense(const lpa::Multivector& x) {
  Dense out(std::size_t{1} << x.signature().dimension(), 0.0);
  for (const auto& [blade, value] : x.terms()) out[blade.mask] = value;
  return out;
}

Dense product(const std::vector<int>& sq, const Dense& a, const Dense& b) {
  Dense out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0.0) continue;
      const BladeProduct bp =
          blade_product(sq, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      out[bp.mask] += bp.sign * a[i] * b[j];
    }
  }
  return out;
}

Dense add(const Dense& a, const Dense& b, double scale_b) {
  Dense out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += scale_b * b[i];
  return out;
}

Dense reverse(const Dense& a) {
  Dense out(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Reversing g symbols takes g(g-1)/2 adjacent swaps.
    const int g = static_cast<int>(indices(static_cast<std::uint32_t>(i)).size());
    if ((g * (g - 1) / 2) % 2 == 1) out[i] = -out[i];
  }
  return out;
}

double max_abs(const Dense& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::fabs(v));
  return m;
}

double max_abs_difference(const Dense& a, const Dense& b) { return max_abs(add(a, b, -1.0)); }

double max_abs_difference(const lpa::Multivector& a, const Dense& b) {
  return max_abs_difference(dense(a), b);
}

}  // namespace oracle
