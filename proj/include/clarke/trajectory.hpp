#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "clarke/design.hpp"

namespace clarke {

/// Degree-9 smoothstep S(tau) = 126 tau^5 - 420 tau^6 + 540 tau^7 - 315 tau^8 + 70 tau^9.
/// Its first four derivatives vanish at both ends, so a velocity ramp shaped
/// by S joins a constant velocity C4-smoothly.
namespace smoothstep {

/// Maximum of S' on [0, 1], reached at tau = 1/2.
inline constexpr double kMaxSlope = 315.0 / 128.0;

double value(double tau);
/// S'(tau) = 630 tau^4 (1 - tau)^4
double slope(double tau);
double curvature(double tau);
/// Integral of S from 0 to tau; equals 1/2 at tau = 1.
double integral(double tau);

}  // namespace smoothstep

struct KinematicLimits {
    double v_max = 0.0;    ///< m/s
    double a_max = 0.0;    ///< m/s^2, speeding up
    double dec_max = 0.0;  ///< m/s^2, slowing down

    /// v = 0.01*pi m/s, a = dec = 0.125*pi m/s^2.
    static KinematicLimits evaluation_defaults();
    void validate() const;
};

/// One lift-off / cruise / set-down profile of one joint.
///
/// Velocity: v*S(s/t_lo) on lift-off, v on cruise, v*(1 - S(.)) on set-down,
/// signed by delta_rho. Phase times are relative to t_enb.
struct TrajectoryState {
    double delta_rho = 0.0;  ///< m
    double v = 0.0;          ///< peak speed, m/s
    double a = 0.0;          ///< peak lift-off acceleration, m/s^2
    double dec = 0.0;        ///< peak set-down deceleration, m/s^2
    double t_lo = 0.0;
    double t_cr = 0.0;
    double t_sd = 0.0;
    double t_enb = 0.0;  ///< absolute start time, s

    [[nodiscard]] double duration() const { return t_lo + t_cr + t_sd; }

    /// Displacement, velocity and acceleration at s seconds after t_enb.
    /// Clamps to 0 before the start and to delta_rho after the end.
    [[nodiscard]] double position(double s) const;
    [[nodiscard]] double velocity(double s) const;
    [[nodiscard]] double acceleration(double s) const;
};

/// Time-optimal profile for one displacement under the limits; falls back to
/// a triangular profile (t_cr = 0) when the distance is too short to cruise.
/// Throws InvalidParameter for a non-finite delta.
TrajectoryState plan_segment(double delta, const KinematicLimits& limits);

/// Gives every joint of one segment the phase durations of the slowest joint
/// and rescales the peak speeds so each joint still covers its delta. All
/// joints then share one normalized position profile.
std::vector<TrajectoryState> synchronize(std::vector<TrajectoryState> per_joint);

/// Superposition of m synchronized segments for n joints.
struct PlannedTrajectory {
    JointVector start;
    JointVector goal;
    std::vector<std::vector<TrajectoryState>> states;  ///< [segment][joint]
    double horizon = 0.0;
    double overlap_fraction = 0.0;

    [[nodiscard]] std::size_t design_n() const { return static_cast<std::size_t>(start.size()); }
    [[nodiscard]] std::size_t segments() const { return states.size(); }
};

/// Position, velocity and acceleration of all joints at one instant.
struct TrajectorySample {
    JointVector position;
    JointVector velocity;
    JointVector acceleration;
};

/// Chains the segments: t_enb(j+1) = t_enb(j) + T(j) - overlap * min(t_sd(j), t_lo(j+1)).
/// When limits are given, the blended result is dilated in time until
/// velocities and accelerations respect them again.
PlannedTrajectory blend(const JointVector& start,
                        std::vector<std::vector<TrajectoryState>> segments,
                        double overlap_fraction,
                        const std::optional<KinematicLimits>& limits = std::nullopt);

/// Plans, synchronizes and blends a trajectory through the via points
/// (first = start, last = goal).
PlannedTrajectory plan_via_points(const std::vector<JointVector>& via_points,
                                  const KinematicLimits& limits, double overlap_fraction = 0.5);

/// Closed-form evaluation. Throws OutOfRange outside [0, horizon].
TrajectorySample evaluate(const PlannedTrajectory& traj, double t);

/// Stretches time by factor (>= 1 slows down): durations * k, v / k, a / k^2.
PlannedTrajectory dilate(const PlannedTrajectory& traj, double factor);

/// Smallest dilation that makes the horizon an integer multiple of dt.
PlannedTrajectory align_to_grid(const PlannedTrajectory& traj, double dt);

/// Largest sampled |velocity|, speeding-up |acceleration| and slowing-down
/// |acceleration| of map * rho(t) (identity when map is empty).
struct PeakRates {
    double velocity = 0.0;
    double acceleration = 0.0;
    double deceleration = 0.0;
};

PeakRates peak_rates(const PlannedTrajectory& traj, const Eigen::MatrixXd& map = {},
                     double sample_dt = 1e-4);

/// Dilation factor (>= 1) that brings the sampled peak rates of map * rho(t)
/// under the limits, with a small margin for inter-sample peaks.
double feasibility_factor(const PlannedTrajectory& traj, const KinematicLimits& limits,
                          const Eigen::MatrixXd& map = {}, double sample_dt = 1e-4);

PlannedTrajectory enforce_limits(const PlannedTrajectory& traj, const KinematicLimits& limits,
                                 const Eigen::MatrixXd& map = {}, double sample_dt = 1e-4);

/// Times at which a phase or blend boundary occurs, sorted.
std::vector<double> boundary_times(const PlannedTrajectory& traj);

}  // namespace clarke
