#include "clarke/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "clarke/errors.hpp"

namespace clarke {

PlannedTrajectory plan_experiment_trajectory(const RobotDesign& surrogate,
                                             const RobotDesign& target, std::uint64_t seed,
                                             const ExperimentConfig& config,
                                             JointSamples* via_out, double* dilation_out)
{
    if (config.segments < 1)
        throw InvalidParameter("at least one trajectory segment is required");
    const TransformPair source(surrogate);
    const TransformPair sink(target);

    JointSamples via =
        sample_joints(surrogate, seed, static_cast<std::size_t>(config.segments) + 1);
    std::vector<JointVector> points;
    for (Eigen::Index k = 0; k < via.joints.rows(); ++k)
        points.emplace_back(via.joints.row(k).transpose());
    PlannedTrajectory traj = plan_via_points(points, config.limits, config.overlap_fraction);

    const double k = std::max(
        feasibility_factor(traj, config.limits,
                           make_transfer_map(source, sink, TransferMode::Symmetric).matrix),
        feasibility_factor(traj, config.limits,
                           make_transfer_map(source, sink, TransferMode::General).matrix));
    if (k > 1.0)
        traj = dilate(traj, k);
    traj = align_to_grid(traj, config.sim.dt);

    if (via_out)
        *via_out = std::move(via);
    if (dilation_out)
        *dilation_out = k;
    return traj;
}

ExperimentResult run_experiment(const RobotDesign& surrogate, const RobotDesign& target,
                                std::uint64_t seed, TransferMode transfer_mode,
                                const ExperimentConfig& config, Exec exec)
{
    ExperimentResult out;
    out.surrogate = surrogate;
    out.target = target;
    out.transfer_mode = transfer_mode;
    out.seed = seed;
    out.trajectory = plan_experiment_trajectory(surrogate, target, seed, config, &out.via_points,
                                                &out.target_dilation);

    const double dt = config.sim.dt;
    const auto ticks = static_cast<std::size_t>(std::llround(out.trajectory.horizon / dt)) + 1;
    out.surrogate_grid = kernels::sample_trajectory(out.trajectory, dt, ticks, exec);
    out.transfer = make_transfer_map(surrogate, target, transfer_mode);
    out.desired = kernels::map_stream(out.transfer.matrix, out.surrogate_grid.position, exec);
    out.desired_velocity =
        kernels::map_stream(out.transfer.matrix, out.surrogate_grid.velocity, exec);

    for (std::size_t m = 0; m < std::size(kAllSimModes); ++m) {
        SimConfig sim = config.sim;
        sim.mode = kAllSimModes[m];
        sim.seed = seed;
        sim.transfer_mode = transfer_mode;
        out.runs[m] = run(out.desired, target, sim);
    }
    return out;
}

}  // namespace clarke
