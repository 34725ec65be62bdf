#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpa/check_report.hpp"

namespace lpa::cli {

struct ReportEntry {
  std::string label;
  std::string anchor;  // the identity being checked, as a formula string
  double residual = 0.0;
  bool pass = false;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double tol = 0.0;
  std::vector<ReportEntry> entries;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }

  // Folds a check report in by label: the residual kept is the largest seen,
  // and pass is re-judged against tol.
  void merge(const CheckReport& checks);
  void merge(const std::string& label, const std::string& anchor, double residual);

  friend bool operator==(const Report&, const Report&) = default;
};

// Stable JSON tree: {suite, seed, trials, tol, entries[{label, anchor, residual, pass}], summary}.
std::string to_json(const Report& report);
// Throws lpa::ParseError on malformed input.
Report report_from_json(const std::string& text);

std::string to_text(const Report& report);

}  // namespace lpa::cli
