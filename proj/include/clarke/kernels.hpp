#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "clarke/trajectory.hpp"

namespace clarke {

/// Data-parallel batch kernels. Every kernel has a serial reference and an
/// OpenMP version; both produce bit-identical results for the same inputs.
enum class Exec { Serial, Parallel };

namespace kernels {

/// Samples per RNG block. Block b of a stream is seeded independently, so
/// blocks can be generated in any order and still give the same batch.
inline constexpr std::size_t kDiskBlock = 4096;

/// Disk magnitudes L = radius * sqrt(u), u ~ U[0,1), and angles
/// theta = pi * u', u' ~ U[-1,1).
struct DiskDraws {
    std::vector<double> magnitude;
    std::vector<double> angle;
};

DiskDraws draw_disk(std::uint64_t seed, std::size_t count, double radius, Exec exec);

/// Rows: joint vectors (count x n) decoded from columns of `clarke` (2 x count).
Eigen::MatrixXd decode_batch(const Eigen::MatrixX2d& inverse, const Eigen::Matrix2Xd& clarke,
                             Exec exec);

/// Applies map (m x n) to every row of stream (ticks x n) -> ticks x m.
Eigen::MatrixXd map_stream(const Eigen::MatrixXd& map, const Eigen::MatrixXd& stream, Exec exec);

/// Trajectory sampled at t_k = min(k * dt, horizon), k = 0 .. ticks - 1.
struct TrajectoryGrid {
    std::vector<double> time;
    Eigen::MatrixXd position;      ///< ticks x n
    Eigen::MatrixXd velocity;
    Eigen::MatrixXd acceleration;
};

TrajectoryGrid sample_trajectory(const PlannedTrajectory& traj, double dt, std::size_t ticks,
                                 Exec exec);

}  // namespace kernels
}  // namespace clarke
