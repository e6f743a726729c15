#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "clarke/kernels.hpp"
#include "clarke/transform.hpp"

namespace clarke {

/// Clarke coordinates drawn uniformly from the disk of radius pi * d_ref
/// (the half-circle bound of a segment with joint distance d_ref).
struct SampleBatch {
    std::uint64_t seed = 0;
    double d_ref = 0.0;
    std::vector<ClarkeCoordinates> clarke;
    std::vector<double> magnitude;  ///< L, meters
    std::vector<double> angle;      ///< theta, [-pi, pi)

    [[nodiscard]] std::size_t count() const { return clarke.size(); }
    /// 2 x count matrix of the pairs.
    [[nodiscard]] Eigen::Matrix2Xd matrix() const;
};

/// Rejection-free disk sampling. Deterministic per seed. Throws
/// InvalidParameter for count == 0 or d_ref <= 0.
SampleBatch sample_clarke_disk(std::uint64_t seed, std::size_t count, double d_ref,
                               Exec exec = Exec::Parallel);

struct JointSamples {
    SampleBatch batch;
    Eigen::MatrixXd joints;  ///< count x n, row k decodes batch.clarke[k]
};

/// Disk samples with d_ref = min(d_i), decoded through the inverse matrix.
JointSamples sample_joints(const RobotDesign& design, std::uint64_t seed, std::size_t count,
                           Exec exec = Exec::Parallel);

}  // namespace clarke
