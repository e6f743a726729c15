#pragma once

#include <array>
#include <cstdint>

#include "clarke/control_sim.hpp"
#include "clarke/encoder_decoder.hpp"
#include "clarke/kernels.hpp"
#include "clarke/sampler.hpp"
#include "clarke/trajectory.hpp"

namespace clarke {

struct ExperimentConfig {
    SimConfig sim;  ///< mode, seed and transfer_mode are set per run
    KinematicLimits limits = KinematicLimits::evaluation_defaults();
    double overlap_fraction = 0.5;
    int segments = 5;  ///< m; m + 1 via points are sampled
};

/// Surrogate trajectory retargeted to one target design and simulated in all
/// three modes.
struct ExperimentResult {
    RobotDesign surrogate;
    RobotDesign target;
    TransferMode transfer_mode = TransferMode::General;
    std::uint64_t seed = 0;
    JointSamples via_points;
    PlannedTrajectory trajectory;  ///< surrogate, aligned to the control grid
    double target_dilation = 1.0;  ///< slow-down applied for the target's limits
    kernels::TrajectoryGrid surrogate_grid;
    TransferMap transfer;
    Eigen::MatrixXd desired;           ///< ticks x target.n
    Eigen::MatrixXd desired_velocity;  ///< ticks x target.n
    std::array<SimRun, 3> runs;        ///< indexed like kAllSimModes
};

/// Plans the surrogate trajectory for one seed and slows it down until both
/// the symmetric and the general retargeting to `target` respect the limits;
/// the horizon is then aligned to the control grid. Mode independent, so
/// both transfer modes see the same surrogate motion.
PlannedTrajectory plan_experiment_trajectory(const RobotDesign& surrogate,
                                             const RobotDesign& target, std::uint64_t seed,
                                             const ExperimentConfig& config,
                                             JointSamples* via_out = nullptr,
                                             double* dilation_out = nullptr);

ExperimentResult run_experiment(const RobotDesign& surrogate, const RobotDesign& target,
                                std::uint64_t seed, TransferMode transfer_mode,
                                const ExperimentConfig& config = {}, Exec exec = Exec::Parallel);

}  // namespace clarke
