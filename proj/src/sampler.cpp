#include "clarke/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clarke/errors.hpp"

namespace clarke {

Eigen::Matrix2Xd SampleBatch::matrix() const
{
    Eigen::Matrix2Xd m(2, static_cast<Eigen::Index>(clarke.size()));
    for (std::size_t k = 0; k < clarke.size(); ++k)
        m.col(static_cast<Eigen::Index>(k)) = clarke[k].vec();
    return m;
}

SampleBatch sample_clarke_disk(std::uint64_t seed, std::size_t count, double d_ref, Exec exec)
{
    if (count == 0)
        throw InvalidParameter("sample count must be at least 1");
    if (!(d_ref > 0.0) || !std::isfinite(d_ref))
        throw InvalidParameter("reference distance must be positive");

    kernels::DiskDraws draws =
        kernels::draw_disk(seed, count, std::numbers::pi * d_ref, exec);
    SampleBatch batch;
    batch.seed = seed;
    batch.d_ref = d_ref;
    batch.clarke.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        batch.clarke[k] = {draws.magnitude[k] * std::cos(draws.angle[k]),
                           draws.magnitude[k] * std::sin(draws.angle[k])};
    }
    batch.magnitude = std::move(draws.magnitude);
    batch.angle = std::move(draws.angle);
    return batch;
}

JointSamples sample_joints(const RobotDesign& design, std::uint64_t seed, std::size_t count,
                           Exec exec)
{
    const TransformPair pair(design);
    const double d_ref = *std::min_element(design.d.begin(), design.d.end());
    JointSamples out;
    out.batch = sample_clarke_disk(seed, count, d_ref, exec);
    out.joints = kernels::decode_batch(pair.inverse(), out.batch.matrix(), exec);
    return out;
}

}  // namespace clarke
