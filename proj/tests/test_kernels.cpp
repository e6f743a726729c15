#include <doctest.h>

#include "clarke/experiment.hpp"
#include "clarke/registry.hpp"
#include "oracles.hpp"

using namespace clarke;

namespace {

bool bit_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    return a.rows() == b.rows() && a.cols() == b.cols()
           && std::equal(a.data(), a.data() + a.size(), b.data());
}

}  // namespace

TEST_CASE("disk draws: serial and parallel are bit-identical")
{
    for (std::size_t count : {std::size_t{1}, kernels::kDiskBlock - 1, kernels::kDiskBlock,
                              3 * kernels::kDiskBlock + 17}) {
        const auto s = kernels::draw_disk(99, count, 0.02, Exec::Serial);
        const auto p = kernels::draw_disk(99, count, 0.02, Exec::Parallel);
        CHECK(s.magnitude == p.magnitude);
        CHECK(s.angle == p.angle);
    }
}

TEST_CASE("decode and map kernels: serial and parallel are bit-identical")
{
    const auto& d = *find_builtin("robot_D");
    const TransformPair pair(d);
    const auto batch = sample_clarke_disk(5, 20000, 0.001);
    const auto s = kernels::decode_batch(pair.inverse(), batch.matrix(), Exec::Serial);
    const auto p = kernels::decode_batch(pair.inverse(), batch.matrix(), Exec::Parallel);
    CHECK(bit_equal(s, p));
    // Against the plain matrix product.
    const Eigen::MatrixXd ref = (pair.inverse() * batch.matrix()).transpose();
    CHECK((s - ref).cwiseAbs().maxCoeff() < 1e-18);

    const auto map = make_transfer_map(d, *find_builtin("robot_B"), TransferMode::General);
    const auto ms = kernels::map_stream(map.matrix, s, Exec::Serial);
    const auto mp = kernels::map_stream(map.matrix, s, Exec::Parallel);
    CHECK(bit_equal(ms, mp));
    CHECK((ms - s * map.matrix.transpose()).cwiseAbs().maxCoeff() < 1e-17);
    CHECK_THROWS(kernels::map_stream(map.matrix, Eigen::MatrixXd::Zero(3, 3), Exec::Serial));
}

TEST_CASE("trajectory sampling: serial and parallel are bit-identical")
{
    const ExperimentConfig config;
    const auto traj = plan_experiment_trajectory(*find_builtin("robot_0"),
                                                 *find_builtin("robot_C"), 3, config);
    const double dt = 1e-3;
    const auto ticks = static_cast<std::size_t>(std::llround(traj.horizon / dt)) + 1;
    const auto s = kernels::sample_trajectory(traj, dt, ticks, Exec::Serial);
    const auto p = kernels::sample_trajectory(traj, dt, ticks, Exec::Parallel);
    CHECK(s.time == p.time);
    CHECK(bit_equal(s.position, p.position));
    CHECK(bit_equal(s.velocity, p.velocity));
    CHECK(bit_equal(s.acceleration, p.acceleration));
    CHECK(s.time.back() == doctest::Approx(traj.horizon));
    CHECK((s.position.row(static_cast<Eigen::Index>(ticks) - 1).transpose() - traj.goal)
              .cwiseAbs()
              .maxCoeff()
          == 0.0);
}

TEST_CASE("experiment is independent of the execution policy")
{
    const auto& r0 = *find_builtin("robot_0");
    const auto& b = *find_builtin("robot_B");
    const auto s = run_experiment(r0, b, 11, TransferMode::Symmetric, {}, Exec::Serial);
    const auto p = run_experiment(r0, b, 11, TransferMode::Symmetric, {}, Exec::Parallel);
    CHECK(bit_equal(s.desired, p.desired));
    for (std::size_t m = 0; m < 3; ++m)
        CHECK(bit_equal(s.runs[m].actual, p.runs[m].actual));
}
