// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qvt/report.hpp"
#include "qvt/scenario.hpp"

namespace qvt {

/// Execute a parsed scenario and build its report.  All SI <-> natural
/// unit conversion happens here; the physics modules never convert.
Report run_scenario(const Scenario& scenario);

struct ScenarioOutcome {
  std::string file;
  std::string name;
  bool pass = false;
};

/// Run every *.scn file in a directory (sorted by filename).
std::vector<ScenarioOutcome> check_all(const std::string& directory);

}  // namespace qvt
