#include "clarke/registry.hpp"

#include <numbers>

namespace clarke {

namespace {

RobotDesign make(std::string name, std::vector<double> turns, std::vector<double> d_mm)
{
    RobotDesign design;
    design.name = std::move(name);
    design.l = 0.1;
    for (double t : turns)
        design.psi.push_back(2.0 * std::numbers::pi * t);
    for (double mm : d_mm)
        design.d.push_back(mm * 1e-3);
    return design;
}

}  // namespace

const std::vector<RobotDesign>& builtin_designs()
{
    // Angles in turns (fractions of 2*pi), distances in millimeters.
    static const std::vector<RobotDesign> designs = {
        make("robot_0", {0.0, 1.0 / 3.0, 2.0 / 3.0}, {10, 10, 10}),
        make("robot_A", {0.0, 0.25, 0.5, 0.75}, {10, 10, 10, 10}),
        make("robot_B", {0.0, 1.0 / 3.0, 2.0 / 3.0}, {10, 7, 5}),
        make("robot_C", {0.0, 0.2, 0.4, 0.6, 0.8}, {10, 8.7, 5, 9.5, 6.5}),
        make("robot_D", {0.05, 0.18, 0.51, 0.63, 0.76, 0.87, 0.91},
             {10, 1, 8.7, 5, 5.6, 9.5, 6.5}),
    };
    return designs;
}

const RobotDesign* find_builtin(std::string_view name)
{
    for (const auto& design : builtin_designs())
        if (design.name == name)
            return &design;
    return nullptr;
}

}  // namespace clarke
