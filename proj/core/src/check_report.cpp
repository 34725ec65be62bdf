#include "lpa/check_report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpa {

void CheckReport::add(std::string label, std::string identity, double residual) {
  const bool pass = residual <= tolerance_;  // NaN fails
  entries_.push_back({std::move(label), std::move(identity), residual, pass});
}

void CheckReport::append(const CheckReport& other) {
  for (const auto& e : other.entries()) add(e.label, e.identity, e.residual);
}

bool CheckReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.pass; });
}

double CheckReport::max_residual() const {
  double m = 0.0;
  for (const auto& e : entries_) {
    if (std::isnan(e.residual)) return e.residual;
    m = std::max(m, e.residual);
  }
  return m;
}

double CheckReport::residual(const std::string& label) const {
  for (const auto& e : entries_) {
    if (e.label == label) return e.residual;
  }
  throw std::out_of_range("no report entry labelled " + label);
}

}  // namespace lpa
