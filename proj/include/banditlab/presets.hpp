#pragma once

#include <string>
#include <vector>

#include "banditlab/scenario.hpp"

namespace banditlab {

// Built-in benchmark scenarios. Arm counts, reward families, parameter
// sampling rules and horizons follow the published benchmark settings; the
// default replication count is the desk-scale 1000 (raise with --J for
// full-scale runs).
const std::vector<Scenario>& preset_scenarios();

// nullptr when no preset has that name.
const Scenario* find_preset(const std::string& name);

}  // namespace banditlab
