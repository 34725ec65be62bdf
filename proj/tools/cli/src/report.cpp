#include "lpa_cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "lpa/errors.hpp"

namespace lpa::cli {

int Report::passed() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const ReportEntry& e) { return e.pass; }));
}

int Report::failed() const { return static_cast<int>(entries.size()) - passed(); }

void Report::merge(const std::string& label, const std::string& anchor, double residual) {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const ReportEntry& e) { return e.label == label; });
  if (it == entries.end()) {
    entries.push_back({label, anchor, residual, residual <= tol});
    return;
  }
  // NaN residuals must stick.
  if (!(residual <= it->residual)) it->residual = residual;
  it->pass = it->residual <= tol;
}

void Report::merge(const CheckReport& checks) {
  for (const auto& e : checks.entries()) merge(e.label, e.identity, e.residual);
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json root;
  root["suite"] = report.suite;
  root["seed"] = report.seed;
  root["trials"] = report.trials;
  root["tol"] = report.tol;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json item;
    item["label"] = e.label;
    item["anchor"] = e.anchor;
    item["residual"] = e.residual;
    item["pass"] = e.pass;
    entries.push_back(std::move(item));
  }
  root["entries"] = std::move(entries);
  root["summary"] = {{"total", report.entries.size()},
                     {"passed", report.passed()},
                     {"failed", report.failed()}};
  return root.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const auto root = nlohmann::json::parse(text);
    Report report;
    report.suite = root.at("suite").get<std::string>();
    report.seed = root.at("seed").get<std::uint64_t>();
    report.trials = root.at("trials").get<int>();
    report.tol = root.at("tol").get<double>();
    for (const auto& item : root.at("entries")) {
      report.entries.push_back({item.at("label").get<std::string>(),
                                item.at("anchor").get<std::string>(),
                                item.at("residual").get<double>(), item.at("pass").get<bool>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what(), 0);
  }
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "suite: " << report.suite << "\n";
  out << "seed: " << report.seed << "  trials: " << report.trials << "  tol: " << report.tol
      << "\n";
  for (const auto& e : report.entries) {
    char residual[32];
    std::snprintf(residual, sizeof residual, "%.3e", e.residual);
    out << (e.pass ? "PASS  " : "FAIL  ") << e.label << "  residual " << residual << "  ["
        << e.anchor << "]\n";
  }
  out << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
  return out.str();
}

}  // namespace lpa::cli
