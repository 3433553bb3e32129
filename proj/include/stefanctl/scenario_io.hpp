#pragma once

#include <string>

#include "stefanctl/core.hpp"

namespace stefanctl {

struct LoadedScenario {
  Scenario scenario;
  FeasibilityVerdict feasibility;  ///< echoed verdict, never blocking
};

/// Parses the flat `key = value` scenario format (one pair per line, `#`
/// comments, SI units). Applies defaults, runs core validation and
/// evaluates setpoint feasibility. Throws ParseError with the offending
/// line number on malformed input; a missing-keys error lists every
/// missing required key at once.
LoadedScenario parse_scenario(const std::string& path);

/// Same, but from an in-memory string (used by tests).
LoadedScenario parse_scenario_text(const std::string& text);

}  // namespace stefanctl
