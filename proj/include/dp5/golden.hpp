#pragma once

#include "dp5/serialization.hpp"

#include <string>
#include <vector>

namespace dp5 {

struct GoldenCheck {
    std::string module;
    std::string description;
    bool pass;
    std::string detail;
};

/// Every reference value the toolkit reproduces, evaluated in-process.
std::vector<GoldenCheck> run_golden_suite();

struct ScenarioReport {
    json result;
    /// One message per "expect" entry that disagrees with the computed value.
    std::vector<std::string> mismatches;
};

ScenarioReport evaluate_scenario(const Scenario& s);

/// Scenario files shipped under data/scenarios, relative to the data directory.
std::vector<std::string> bundled_scenarios();

}  // namespace dp5
