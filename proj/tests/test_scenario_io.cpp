#include <doctest.h>

#include <string>

#include "stefanctl/errors.hpp"
#include "stefanctl/scenario_io.hpp"

using namespace stefanctl;

namespace {

const char* kMinimal =
    "rho = 6570\n"
    "cp = 389.5687\n"
    "k = 116\n"
    "dh = 111961\n"
    "t_melt = 692.68\n"
    "gain_c = 0.01\n"
    "setpoint_sr = 0.35\n"
    "s0 = 0.01\n"
    "h_slope = 10000\n"
    "t_final = 300\n";

}  // namespace

TEST_CASE("bundled feasible scenario parses with the reference values") {
  const LoadedScenario loaded =
      parse_scenario(std::string(STEFANCTL_SCENARIO_DIR) + "/zinc_feasible.cfg");
  const Scenario& sc = loaded.scenario;
  CHECK(sc.s0 == doctest::Approx(0.01));
  CHECK(sc.setpoint_sr == doctest::Approx(0.35));
  CHECK(sc.gain_c == doctest::Approx(0.01));
  CHECK(sc.h_slope == doctest::Approx(1e4));
  CHECK(sc.params.rho == doctest::Approx(6570.0));
  CHECK(loaded.feasibility.feasible);
}

TEST_CASE("bundled infeasible scenario is flagged as such") {
  const LoadedScenario loaded =
      parse_scenario(std::string(STEFANCTL_SCENARIO_DIR) + "/zinc_infeasible.cfg");
  CHECK(loaded.scenario.s0 == doctest::Approx(0.25));
  CHECK_FALSE(loaded.feasibility.feasible);
  CHECK(loaded.feasibility.bound == doctest::Approx(1.33734486785577).epsilon(1e-9));
}

TEST_CASE("empty input lists every missing required key") {
  try {
    parse_scenario_text("");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    for (const char* key : {"rho", "cp", "k", "dh", "t_melt", "gain_c",
                            "setpoint_sr", "s0", "h_slope", "t_final"}) {
      CHECK(msg.find(key) != std::string::npos);
    }
  }
}

TEST_CASE("unparsable numbers carry their line number") {
  std::string text = kMinimal;
  text += "n_cells = twenty\n";  // line 11
  try {
    parse_scenario_text(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 11);
  }
}

TEST_CASE("unknown and duplicate keys are rejected") {
  CHECK_THROWS_AS(parse_scenario_text(std::string(kMinimal) + "rh = 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_scenario_text(std::string(kMinimal) + "s0 = 0.02\n"),
                  ParseError);
}

TEST_CASE("defaults are applied") {
  const LoadedScenario loaded = parse_scenario_text(kMinimal);
  const Scenario& sc = loaded.scenario;
  CHECK(sc.n_cells == 200);
  CHECK_FALSE(sc.dt.has_value());
  CHECK(sc.bc_mode == BcMode::ControlledFlux);
  CHECK(sc.integrator == Integrator::Implicit);
  CHECK(sc.domain_length == 0.0);
  CHECK(sc.length() == doctest::Approx(0.42));
}

TEST_CASE("comments, blank lines and explicit options parse") {
  std::string text = kMinimal;
  text +=
      "\n# numerical controls\n"
      "n_cells = 64   # grid\n"
      "dt = 0.5\n"
      "bc_mode = prescribed-flux\n"
      "integrator = explicit\n"
      "domain_length = 1.0\n";
  const LoadedScenario loaded = parse_scenario_text(text);
  CHECK(loaded.scenario.n_cells == 64);
  CHECK(loaded.scenario.dt == doctest::Approx(0.5));
  CHECK(loaded.scenario.bc_mode == BcMode::PrescribedFlux);
  CHECK(loaded.scenario.integrator == Integrator::Explicit);
  CHECK(loaded.scenario.domain_length == doctest::Approx(1.0));
}

TEST_CASE("invariant violations surface as parse errors") {
  std::string text = kMinimal;
  text += "n_cells = 4\n";
  CHECK_THROWS_AS(parse_scenario_text(text), ParseError);
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(parse_scenario("/nonexistent/path.cfg"), ParseError);
}
