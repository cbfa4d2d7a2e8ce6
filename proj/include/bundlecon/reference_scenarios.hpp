#pragma once

// Regression table of reference scenario values, run by `paper-examples`.

#include <string>
#include <vector>

namespace bundlecon {

struct ScenarioOutcome {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

/// Runs every embedded scenario in a fixed order. Deterministic.
std::vector<ScenarioOutcome> runReferenceScenarios();

}  // namespace bundlecon
