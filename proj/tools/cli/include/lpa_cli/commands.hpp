#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpa/relative_view.hpp"
#include "lpa_cli/report.hpp"

namespace lpa::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct VerifyOptions {
  int dim = 3;
  std::uint64_t seed = 1;
  int trials = 10;
  double tol = 1e-12;
};

// Commutation tables, invariance, isomorphism and gauge closed form over
// random configurations in G(1,dim). Throws PreconditionError for dim outside
// 2..6 or trials < 1.
Report cmd_verify(const VerifyOptions& options);

struct DemoOptions {
  double alpha = 1.0;
  double beta = 0.0;
  std::optional<double> theta;  // overrides alpha when set
  double angle = 1.0;           // rotation angle for the invariance counterexample
  std::array<double, 4> a{1.0, 0.5, 0.25, 1.0};
  std::array<double, 4> b{};
  std::vector<double> s{1.0, 0.5};
  double tol = 1e-12;
};

struct DemoOutput {
  std::string text;
  bool pass = true;
};

const std::vector<std::string>& demo_names();
// Throws PreconditionError for unknown names.
DemoOutput cmd_demo(const std::string& name, const DemoOptions& options);

struct ConstructOutput {
  std::string text;
  bool pass = true;
};

// parent is "p,q" (or "p,q,r"); k is multivector text.
ConstructOutput cmd_construct(const std::string& parent, const std::string& k_text);

const std::vector<std::string>& figure_names();
RelativeViewScene figure_scene(const std::string& fig, double slice_time, double alpha = 1.0,
                               double beta = 0.0);
// SVG unless the path ends in ".csv".
std::string render_figure(const RelativeViewScene& scene, const std::string& out_path);

std::vector<double> parse_number_list(const std::string& text);

}  // namespace lpa::cli
