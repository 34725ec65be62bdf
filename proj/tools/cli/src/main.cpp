#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lpa/errors.hpp"
#include "lpa_cli/commands.hpp"

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("LPA_SEED");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw lpa::ParseError("LPA_SEED must be a non-negative integer", 0);
  return v;
}

std::array<double, 4> four(const std::string& text, const char* flag) {
  const auto values = lpa::cli::parse_number_list(text);
  if (values.size() != 4) throw lpa::PreconditionError(std::string(flag) + " takes four components");
  return {values[0], values[1], values[2], values[3]};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lpa::PreconditionError("cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw lpa::PreconditionError("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lpa::cli;
  CLI::App app{"Little-group and lightcone algebra checks"};
  app.require_subcommand(1);

  VerifyOptions verify;
  bool json = false;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite over random configurations");
  verify_cmd->add_option("--dim", verify.dim, "Spatial dimension n of G(1,n), 2..6");
  auto* seed_opt = verify_cmd->add_option("--seed", verify.seed, "RNG seed (default $LPA_SEED or 1)");
  verify_cmd->add_option("--trials", verify.trials, "Random configurations");
  verify_cmd->add_option("--tol", verify.tol, "Pass tolerance");
  verify_cmd->add_flag("--json", json, "Print the machine-readable report");
  verify_cmd->add_option("--out", verify_out, "Also write the machine-readable report here");

  DemoOptions demo;
  std::string demo_name, a_text, b_text, s_text;
  double theta = 0.0;
  auto* demo_cmd = app.add_subcommand("demo", "Evaluate one closed form against the algebra");
  demo_cmd->add_option("name", demo_name, "commutators|rotor|gauge|invariance|fold")->required();
  demo_cmd->add_option("--alpha", demo.alpha, "Real part of theta");
  demo_cmd->add_option("--beta", demo.beta, "Pseudoscalar part of theta");
  auto* theta_opt = demo_cmd->add_option("--theta", theta, "Real angle (rotor demo), overrides --alpha");
  demo_cmd->add_option("--angle", demo.angle, "Rotation angle (invariance demo)");
  demo_cmd->add_option("--a", a_text, "Potential vector part a0,a1,a2,a3");
  demo_cmd->add_option("--b", b_text, "Potential pseudovector part b0,b1,b2,b3");
  demo_cmd->add_option("--s", s_text, "Spatial vector frame coordinates s1,s2");
  demo_cmd->add_option("--tol", demo.tol, "Pass tolerance");

  std::string parent = "1,3", k_text;
  auto* construct_cmd = app.add_subcommand("construct", "Build W(k) for a lightlike k");
  construct_cmd->add_option("--parent", parent, "Parent signature p,q");
  construct_cmd->add_option("--k", k_text, "Lightlike vector, e.g. \"e0+e3\"")->required();

  std::string fig, project_out;
  double slice_time = lpa::kDefaultSliceTime, fig_alpha = 1.0, fig_beta = 0.0;
  auto* project_cmd = app.add_subcommand("project", "Emit a relative-view figure as SVG or CSV");
  project_cmd->add_option("--fig", fig, "lightcone|invariance|basis")->required();
  project_cmd->add_option("--time", slice_time, "Slice time ct");
  project_cmd->add_option("--alpha", fig_alpha, "Translation angle, real part (invariance)");
  project_cmd->add_option("--beta", fig_beta, "Translation angle, pseudoscalar part (invariance)");
  project_cmd->add_option("--out", project_out, "Output path (.svg or .csv); stdout if absent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify_cmd) {
      if (seed_opt->count() == 0) verify.seed = default_seed();
      const Report report = cmd_verify(verify);
      const std::string machine = to_json(report);
      if (!verify_out.empty()) write_file(verify_out, machine);
      std::cout << (json ? machine : to_text(report));
      return report.all_pass() ? kExitPass : kExitFailure;
    }
    if (*demo_cmd) {
      if (theta_opt->count() > 0) demo.theta = theta;
      if (!a_text.empty()) demo.a = four(a_text, "--a");
      if (!b_text.empty()) demo.b = four(b_text, "--b");
      if (!s_text.empty()) demo.s = parse_number_list(s_text);
      const DemoOutput out = cmd_demo(demo_name, demo);
      std::cout << out.text;
      return out.pass ? kExitPass : kExitFailure;
    }
    if (*construct_cmd) {
      const ConstructOutput out = cmd_construct(parent, k_text);
      std::cout << out.text;
      return out.pass ? kExitPass : kExitFailure;
    }
    if (*project_cmd) {
      const auto scene = figure_scene(fig, slice_time, fig_alpha, fig_beta);
      const std::string doc = render_figure(scene, project_out);
      if (project_out.empty()) std::cout << doc;
      else write_file(project_out, doc);
      return kExitPass;
    }
  } catch (const lpa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
