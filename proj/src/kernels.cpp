#include "clarke/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clarke/errors.hpp"
#include "clarke/rng.hpp"

namespace clarke::kernels {

namespace {

void fill_disk_block(std::uint64_t seed, std::size_t block, double radius, DiskDraws& out)
{
    const std::size_t begin = block * kDiskBlock;
    const std::size_t end = std::min(begin + kDiskBlock, out.magnitude.size());
    SubstreamRng mag_rng(seed, Stream::DiskMagnitude, block);
    SubstreamRng ang_rng(seed, Stream::DiskAngle, block);
    for (std::size_t k = begin; k < end; ++k) {
        out.magnitude[k] = radius * std::sqrt(mag_rng.uniform01());
        out.angle[k] = std::numbers::pi * ang_rng.uniform(-1.0, 1.0);
    }
}

}  // namespace

DiskDraws draw_disk(std::uint64_t seed, std::size_t count, double radius, Exec exec)
{
    DiskDraws out;
    out.magnitude.resize(count);
    out.angle.resize(count);
    const auto blocks = static_cast<long>((count + kDiskBlock - 1) / kDiskBlock);
    if (exec == Exec::Serial) {
        for (long b = 0; b < blocks; ++b)
            fill_disk_block(seed, static_cast<std::size_t>(b), radius, out);
    } else {
#pragma omp parallel for schedule(static)
        for (long b = 0; b < blocks; ++b)
            fill_disk_block(seed, static_cast<std::size_t>(b), radius, out);
    }
    return out;
}

Eigen::MatrixXd decode_batch(const Eigen::MatrixX2d& inverse, const Eigen::Matrix2Xd& clarke,
                             Exec exec)
{
    const Eigen::Index count = clarke.cols();
    const Eigen::Index n = inverse.rows();
    Eigen::MatrixXd out(count, n);
    // Explicit loops keep the floating-point evaluation order identical
    // between the two paths.
    const auto row = [&](Eigen::Index k) {
        for (Eigen::Index i = 0; i < n; ++i)
            out(k, i) = inverse(i, 0) * clarke(0, k) + inverse(i, 1) * clarke(1, k);
    };
    if (exec == Exec::Serial) {
        for (Eigen::Index k = 0; k < count; ++k)
            row(k);
    } else {
#pragma omp parallel for schedule(static)
        for (Eigen::Index k = 0; k < count; ++k)
            row(k);
    }
    return out;
}

Eigen::MatrixXd map_stream(const Eigen::MatrixXd& map, const Eigen::MatrixXd& stream, Exec exec)
{
    if (map.cols() != stream.cols())
        throw DimensionMismatch("map expects " + std::to_string(map.cols())
                                + " columns, stream has " + std::to_string(stream.cols()));
    const Eigen::Index ticks = stream.rows();
    const Eigen::Index m = map.rows();
    const Eigen::Index n = map.cols();
    Eigen::MatrixXd out(ticks, m);
    const auto row = [&](Eigen::Index k) {
        for (Eigen::Index r = 0; r < m; ++r) {
            double acc = 0.0;
            for (Eigen::Index c = 0; c < n; ++c)
                acc += map(r, c) * stream(k, c);
            out(k, r) = acc;
        }
    };
    if (exec == Exec::Serial) {
        for (Eigen::Index k = 0; k < ticks; ++k)
            row(k);
    } else {
#pragma omp parallel for schedule(static)
        for (Eigen::Index k = 0; k < ticks; ++k)
            row(k);
    }
    return out;
}

TrajectoryGrid sample_trajectory(const PlannedTrajectory& traj, double dt, std::size_t ticks,
                                 Exec exec)
{
    if (!(dt > 0.0))
        throw InvalidParameter("sampling step must be positive");
    const auto n = static_cast<Eigen::Index>(traj.design_n());
    const auto count = static_cast<Eigen::Index>(ticks);
    TrajectoryGrid grid;
    grid.time.resize(ticks);
    grid.position.resize(count, n);
    grid.velocity.resize(count, n);
    grid.acceleration.resize(count, n);
    const auto tick = [&](Eigen::Index k) {
        const double t = std::min(static_cast<double>(k) * dt, traj.horizon);
        const TrajectorySample s = evaluate(traj, t);
        grid.time[static_cast<std::size_t>(k)] = t;
        grid.position.row(k) = s.position.transpose();
        grid.velocity.row(k) = s.velocity.transpose();
        grid.acceleration.row(k) = s.acceleration.transpose();
    };
    if (exec == Exec::Serial) {
        for (Eigen::Index k = 0; k < count; ++k)
            tick(k);
    } else {
#pragma omp parallel for schedule(static)
        for (Eigen::Index k = 0; k < count; ++k)
            tick(k);
    }
    return grid;
}

}  // namespace clarke::kernels
