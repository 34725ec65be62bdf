#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace lpa {

// Correctly rounded floating-point summation (Shewchuk's non-overlapping
// partials, final rounding as in Python's math.fsum). The result does not
// depend on the order in which values are added, so x + y - x - y is 0.
class ExactSum {
 public:
  void add(double x) {
    if (!std::isfinite(x)) {
      add_special(x);
      return;
    }
    // Hot path of every product: kept inline over the raw buffer.
    double* p = partials_.data();
    const std::size_t n = partials_.size();
    std::size_t i = 0;
    for (std::size_t j = 0; j < n; ++j) {
      double y = p[j];
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) p[i++] = lo;
      x = hi;
    }
    if (i < n) {
      p[i] = x;
      partials_.resize(i + 1);
    } else {
      partials_.push_back(x);
    }
  }
  double result() const;
  void clear() { partials_.clear(); special_ = 0.0; has_special_ = false; }

 private:
  void add_special(double x);

  std::vector<double> partials_;
  double special_ = 0.0;  // accumulated inf/nan
  bool has_special_ = false;
};

double exact_sum(std::span<const double> values);

}  // namespace lpa
