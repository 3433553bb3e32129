#include "stefanctl/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "stefanctl/errors.hpp"

namespace stefanctl {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line) {
  double out;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("expected a number, got '" + value + "'", line);
  }
  return out;
}

const std::vector<std::string> kRequiredKeys = {
    "rho", "cp", "k", "dh", "t_melt", "gain_c", "setpoint_sr",
    "s0",  "h_slope", "t_final"};

const std::vector<std::string> kOptionalKeys = {
    "domain_length", "n_cells", "dt", "bc_mode", "integrator"};

}  // namespace

LoadedScenario parse_scenario_text(const std::string& text) {
  std::map<std::string, std::pair<std::string, int>> pairs;  // key -> (value, line)
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value', got '" + trim(raw) + "'", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const bool known =
        std::count(kRequiredKeys.begin(), kRequiredKeys.end(), key) > 0 ||
        std::count(kOptionalKeys.begin(), kOptionalKeys.end(), key) > 0;
    if (!known) throw ParseError("unknown key '" + key + "'", line_no);
    if (pairs.count(key)) throw ParseError("duplicate key '" + key + "'", line_no);
    pairs[key] = {value, line_no};
  }

  std::string missing;
  for (const auto& key : kRequiredKeys) {
    if (!pairs.count(key)) missing += missing.empty() ? key : ", " + key;
  }
  if (!missing.empty()) {
    throw ParseError("missing required keys: " + missing, 0);
  }

  auto num = [&](const std::string& key) {
    const auto& [value, line] = pairs.at(key);
    return parse_number(value, line);
  };

  Scenario sc;
  sc.params.rho = num("rho");
  sc.params.cp = num("cp");
  sc.params.k = num("k");
  sc.params.dh = num("dh");
  sc.params.t_melt = num("t_melt");
  sc.gain_c = num("gain_c");
  sc.setpoint_sr = num("setpoint_sr");
  sc.s0 = num("s0");
  sc.h_slope = num("h_slope");
  sc.t_final = num("t_final");

  if (pairs.count("domain_length")) sc.domain_length = num("domain_length");
  if (pairs.count("n_cells")) {
    const double n = num("n_cells");
    sc.n_cells = static_cast<int>(n);
    if (sc.n_cells != n) {
      throw ParseError("n_cells must be an integer", pairs.at("n_cells").second);
    }
  }
  if (pairs.count("dt")) {
    const auto& [value, line] = pairs.at("dt");
    if (value == "auto") {
      sc.dt.reset();
    } else {
      sc.dt = parse_number(value, line);
    }
  }
  if (pairs.count("bc_mode")) {
    const auto& [value, line] = pairs.at("bc_mode");
    if (value == "controlled-flux") {
      sc.bc_mode = BcMode::ControlledFlux;
    } else if (value == "prescribed-flux") {
      sc.bc_mode = BcMode::PrescribedFlux;
    } else if (value == "prescribed-temperature") {
      sc.bc_mode = BcMode::PrescribedTemperature;
    } else {
      throw ParseError("bc_mode must be controlled-flux, prescribed-flux or "
                       "prescribed-temperature",
                       line);
    }
  }
  if (pairs.count("integrator")) {
    const auto& [value, line] = pairs.at("integrator");
    if (value == "explicit") {
      sc.integrator = Integrator::Explicit;
    } else if (value == "implicit") {
      sc.integrator = Integrator::Implicit;
    } else {
      throw ParseError("integrator must be explicit or implicit", line);
    }
  }

  try {
    sc.validate();
  } catch (const InvalidParameterError& e) {
    throw ParseError(std::string("invalid scenario: ") + e.what(), 0);
  }

  LoadedScenario loaded;
  loaded.scenario = sc;
  const InitialProfile profile = build_initial_profile(sc);
  loaded.feasibility = feasible_setpoint(sc, profile);
  return loaded;
}

LoadedScenario parse_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace stefanctl
