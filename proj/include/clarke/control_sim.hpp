#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "clarke/encoder_decoder.hpp"
#include "clarke/transform.hpp"

namespace clarke {

/// First-order lag with unity DC gain, advanced by the exact
/// zero-order-hold discretization x+ = x + (1 - exp(-dt/T)) (u - x).
struct Pt1Actuator {
    double time_constant = 0.25;  ///< s
    double state = 0.0;           ///< m
};

/// Returns the state after holding `command` for dt seconds. Throws
/// InvalidParameter for dt <= 0 or a non-positive time constant.
double step_pt1(const Pt1Actuator& actuator, double command, double dt);

enum class SimMode { OpenLoopClean, OpenLoopNoisy, ClosedLoop };

SimMode parse_sim_mode(std::string_view name);
std::string_view sim_mode_name(SimMode mode);
inline constexpr SimMode kAllSimModes[] = {SimMode::OpenLoopClean, SimMode::OpenLoopNoisy,
                                           SimMode::ClosedLoop};

struct SimConfig {
    double dt = 0.001;             ///< s
    double time_constant = 0.25;   ///< s
    double noise_eps = 0.0025;     ///< m, measurement noise ~ U[-eps, eps]
    double kp = 75.0;
    double kd = 0.0015;            ///< s
    std::uint64_t seed = 0;
    SimMode mode = SimMode::ClosedLoop;
    TransferMode transfer_mode = TransferMode::General;
    double transient_cutoff = 1.0;  ///< s, metrics use t > cutoff

    void validate() const;
};

struct SimMetrics {
    std::vector<double> rms_per_joint;          ///< m, |true - desired|
    std::vector<double> rms_measured_per_joint; ///< m, |measured - desired|
    double rms_latent = 0.0;   ///< 1/m, curvature-pair error of true vs desired
    double max_abs_err = 0.0;  ///< m
    std::vector<double> final_error;  ///< m, true - desired at the last tick
    double final_latent_error = 0.0;  ///< 1/m
    double transient_cutoff = 0.0;
};

/// Time series of one run. Matrices are ticks x n.
struct SimRun {
    std::string robot;
    SimConfig config;
    std::vector<double> time;
    Eigen::MatrixXd desired;
    Eigen::MatrixXd measured;
    Eigen::MatrixXd commanded;
    Eigen::MatrixXd actual;
    SimMetrics metrics;
};

/// Simulates n PT1 actuators tracking `desired` (ticks x n, sampled every
/// config.dt). Closed loop: the error between desired and measured joints is
/// encoded into the curvature pair of the design, passed through one PD law
/// per latent axis and decoded back to joint commands. Open-loop modes feed
/// the desired values straight to the actuators. Throws DimensionMismatch.
SimRun run(const Eigen::MatrixXd& desired, const RobotDesign& design, const SimConfig& config);

/// Metrics from the stored series (t > cutoff).
SimMetrics compute_metrics(const SimRun& run, const TransformPair& pair, double cutoff);

}  // namespace clarke
