#include <doctest.h>

#include "lpa/errors.hpp"
#include "lpa_cli/commands.hpp"
#include "lpa_cli/report.hpp"

using namespace lpa::cli;

TEST_CASE("report merge and judgement") {
  Report r;
  r.tol = 1e-12;
  r.merge("a", "x = x", 1e-14);
  r.merge("a", "x = x", 1e-13);
  r.merge("a", "x = x", 1e-15);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].residual == 1e-13);
  CHECK(r.all_pass());
  r.merge("b", "y = y", 1e-3);
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
}

TEST_CASE("report serialization round-trips") {
  Report r;
  r.suite = "verify G(1,3)";
  r.seed = 18446744073709551615ULL;
  r.trials = 3;
  r.tol = 1e-12;
  r.merge("x", "a \"quoted\" anchor", 0.1 + 0.2);
  r.merge("y", "another", 3.0e-300);
  r.merge("z", "failing", 2.0);
  const std::string json = to_json(r);
  CHECK(report_from_json(json) == r);
  CHECK(to_json(report_from_json(json)) == json);
  CHECK(json.find("\"summary\"") != std::string::npos);
  CHECK_THROWS_AS(report_from_json("{\"suite\": 1}"), lpa::ParseError);
  CHECK_THROWS_AS(report_from_json("not json"), lpa::ParseError);

  const std::string text = to_text(r);
  CHECK(text.find("FAIL  z") != std::string::npos);
  CHECK(text.find("summary: 1 passed, 2 failed") != std::string::npos);
}

TEST_CASE("verify") {
  const Report r = cmd_verify({3, 7, 5, 1e-12});
  CHECK(r.all_pass());
  CHECK(r.suite == "verify G(1,3)");
  CHECK(to_json(r) == to_json(cmd_verify({3, 7, 5, 1e-12})));
  CHECK(cmd_verify({2, 1, 1, 1e-12}).all_pass());
  // An impossible tolerance fails instead of passing vacuously.
  CHECK_FALSE(cmd_verify({4, 1, 2, -1.0}).all_pass());
  CHECK_THROWS_AS(cmd_verify({9, 1, 1, 1e-12}), lpa::PreconditionError);
  CHECK_THROWS_AS(cmd_verify({1, 1, 1, 1e-12}), lpa::PreconditionError);
  CHECK_THROWS_AS(cmd_verify({3, 1, 0, 1e-12}), lpa::PreconditionError);
}

TEST_CASE("demos") {
  DemoOptions gauge;
  gauge.alpha = 1.0;
  gauge.beta = 0.0;
  gauge.a = {1.0, 0.5, 0.25, 1.0};
  const DemoOutput out = cmd_demo("gauge", gauge);
  CHECK(out.pass);
  CHECK(out.text.find("computed: 0.75*e0+0.5*e1+0.25*e2+0.75*e3") != std::string::npos);
  CHECK(out.text.find("residual: 0\n") != std::string::npos);

  DemoOptions rotor;
  rotor.theta = 0.0;
  const DemoOutput r = cmd_demo("rotor", rotor);
  CHECK(r.pass);
  CHECK(r.text.find("computed: 1\n") != std::string::npos);

  const DemoOutput c = cmd_demo("commutators", {});
  CHECK(c.pass);
  CHECK(c.text.find("FAIL") == std::string::npos);
  CHECK(c.text.find("J3 x N1 = N2") != std::string::npos);

  CHECK(cmd_demo("fold", {}).pass);
  CHECK(cmd_demo("invariance", {}).pass);
  CHECK_THROWS_AS(cmd_demo("nope", {}), lpa::PreconditionError);
}

TEST_CASE("construct") {
  const ConstructOutput sta = cmd_construct("1,3", "1*e0+1*e3");
  CHECK(sta.pass);
  CHECK(sta.text.find("frame: [e0+e3, e1, e2]") != std::string::npos);
  CHECK(sta.text.find("isomorphic to G(0,2,1): PASS") != std::string::npos);
  const ConstructOutput lc = cmd_construct("1,2", "1*e0+1*e2");
  CHECK(lc.text.find("frame: [e0+e2, e1]") != std::string::npos);
  CHECK(lc.text.find("isomorphic to G(0,1,1): PASS") != std::string::npos);
  CHECK_THROWS_AS(cmd_construct("1,3", "e0"), lpa::PreconditionError);
  CHECK_THROWS_AS(cmd_construct("1,3", "e0+*e3"), lpa::ParseError);
  CHECK_THROWS_AS(cmd_construct("1.5,3", "e0+e3"), lpa::PreconditionError);
  CHECK_THROWS_AS(cmd_construct("1", "e0+e3"), lpa::PreconditionError);
}

TEST_CASE("figures") {
  for (const auto& name : figure_names()) {
    const auto scene = figure_scene(name, 1.0);
    CHECK(render_figure(scene, "x.svg") == render_figure(figure_scene(name, 1.0), ""));
    CHECK(render_figure(scene, "x.csv").rfind("kind,label,coords\n", 0) == 0);
  }
  CHECK_THROWS_AS(figure_scene("spiral", 1.0), lpa::PreconditionError);
}

TEST_CASE("number lists") {
  CHECK(parse_number_list("1,0.5, 0.25 ,-1") == std::vector<double>{1, 0.5, 0.25, -1});
  CHECK(parse_number_list("+2") == std::vector<double>{2});
  CHECK_THROWS_AS(parse_number_list("1,,2"), lpa::ParseError);
  CHECK_THROWS_AS(parse_number_list("1,x"), lpa::ParseError);
  CHECK_THROWS_AS(parse_number_list(""), lpa::ParseError);
}
