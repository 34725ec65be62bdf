#pragma once

#include <string>
#include <vector>

namespace lpa {

// One verified identity. pass <=> residual <= tolerance of the owning report.
struct CheckEntry {
  std::string label;
  std::string identity;
  double residual = 0.0;
  bool pass = false;

  friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

class CheckReport {
 public:
  explicit CheckReport(double tolerance = 0.0) : tolerance_(tolerance) {}

  void add(std::string label, std::string identity, double residual);
  // Appends the other report's entries, re-judging them against this report's tolerance.
  void append(const CheckReport& other);

  double tolerance() const { return tolerance_; }
  const std::vector<CheckEntry>& entries() const { return entries_; }
  bool all_pass() const;
  double max_residual() const;
  // Residual of the first entry with this label; throws std::out_of_range if absent.
  double residual(const std::string& label) const;

 private:
  double tolerance_;
  std::vector<CheckEntry> entries_;
};

}  // namespace lpa
