#pragma once

#include <string_view>
#include <vector>

#include "clarke/design.hpp"

namespace clarke {

/// The five evaluation robots: robot_0 (surrogate), robot_A .. robot_D.
const std::vector<RobotDesign>& builtin_designs();

/// Looks up a builtin design by name; nullptr if unknown.
const RobotDesign* find_builtin(std::string_view name);

}  // namespace clarke
