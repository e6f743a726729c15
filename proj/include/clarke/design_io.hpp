#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "clarke/design.hpp"

namespace clarke {

/// Parses {"name", "n", "psi_rad", "d_mm", "l_m"}; converts mm -> m and
/// validates. Throws ParseError for schema problems and InvalidParameter for
/// invariant violations.
RobotDesign design_from_json(const nlohmann::json& j);
nlohmann::json design_to_json(const RobotDesign& design);

RobotDesign load_design(const std::filesystem::path& path);

/// Builtin name (robot_0, robot_A, ...) or path to a design file.
RobotDesign resolve_design(const std::string& name_or_path);

}  // namespace clarke
