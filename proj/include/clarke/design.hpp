#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace clarke {

/// Displacement values of the n joints, meters.
using JointVector = Eigen::VectorXd;

/// Kinematic design of a single-segment displacement-actuated continuum robot.
///
/// Joint i sits at polar location (d[i], psi[i]) in the cross-section; the
/// segment has length l. Angles are radians, lengths meters.
struct RobotDesign {
    std::string name;
    std::vector<double> psi;
    std::vector<double> d;
    double l = 0.0;

    [[nodiscard]] std::size_t n() const { return psi.size(); }
};

/// Checks the field invariants (n >= 3, matching lengths, d_i > 0, l > 0,
/// finite values). Throws InvalidParameter. The Gram conditioning check is
/// done by build_pair().
void validate(const RobotDesign& design);

/// psi_i = 2*pi*(i-1)/n and d_i = d for all joints.
RobotDesign symmetric_design(int n, double d, double l, std::string name = "symmetric");

/// True when psi matches 2*pi*(i-1)/n (modulo 2*pi) within tol.
bool has_symmetric_angles(const RobotDesign& design, double tol = 1e-9);

/// True when all d_i are equal within tol (relative).
bool has_constant_distance(const RobotDesign& design, double tol = 1e-12);

/// Pair of Clarke coordinates (rho_Re, rho_Im), meters.
struct ClarkeCoordinates {
    double re = 0.0;
    double im = 0.0;

    [[nodiscard]] double magnitude() const;
    [[nodiscard]] Eigen::Vector2d vec() const { return {re, im}; }
    static ClarkeCoordinates from(const Eigen::Vector2d& v) { return {v.x(), v.y()}; }
};

/// Constant-curvature arc parameters: curvature (1/m) and bending-plane angle
/// in [-pi, pi).
struct ArcParameters {
    double kappa = 0.0;
    double theta = 0.0;

    /// (kappa*cos(theta), kappa*sin(theta)).
    [[nodiscard]] Eigen::Vector2d curvature_pair() const;
    /// Polar form of a curvature pair; theta is 0 when kappa is 0.
    static ArcParameters from_pair(const Eigen::Vector2d& pair);
};

/// Wraps an angle to [-pi, pi).
double wrap_angle(double angle);

}  // namespace clarke
