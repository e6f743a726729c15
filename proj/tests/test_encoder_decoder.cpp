#include <doctest.h>

#include "clarke/encoder_decoder.hpp"
#include "clarke/errors.hpp"
#include "clarke/registry.hpp"
#include "clarke/sampler.hpp"
#include "oracles.hpp"

using namespace clarke;
using oracle::kPi;

namespace {

/// Feasible joints of `design`: a random constant-curvature arc.
JointVector random_feasible(oracle::Gen& g, const RobotDesign& design)
{
    return oracle::joints_from_arc(design, g.uniform(0.0, kPi / design.l), g.uniform(-kPi, kPi));
}

int numerical_rank(const Eigen::MatrixXd& m)
{
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        rank += s(i) > 1e-10 * s(0) ? 1 : 0;
    return rank;
}

}  // namespace

TEST_CASE("symmetric transfer preserves Clarke coordinates")
{
    const auto& r0 = *find_builtin("robot_0");
    const auto& ra = *find_builtin("robot_A");
    const TransformPair p0(r0), pa(ra);
    oracle::Gen g(3);
    for (int k = 0; k < 100; ++k) {
        const JointVector in = random_feasible(g, r0);
        const JointVector out = transfer_symmetric(p0, pa, in);
        CHECK(out.size() == 4);
        CHECK((forward(pa, out).vec() - forward(p0, in).vec()).norm() < 1e-12);
    }
    CHECK(transfer_symmetric(r0, ra, JointVector::Zero(3)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(transfer_symmetric(r0, ra, JointVector::Zero(4)), DimensionMismatch);
}

TEST_CASE("transfer onto itself is the column-space projection")
{
    const auto& c = *find_builtin("robot_C");
    oracle::Gen g(4);
    const JointVector feasible = random_feasible(g, c);
    CHECK((transfer_general(c, c, feasible) - feasible).cwiseAbs().maxCoeff() < 1e-15);

    const auto& r0 = *find_builtin("robot_0");
    const JointVector in_space = inverse(TransformPair(r0), {0.003, -0.001});
    CHECK((transfer_symmetric(r0, r0, in_space) - in_space).cwiseAbs().maxCoeff() < 1e-15);

    // Idempotent map.
    const auto map = make_transfer_map(r0, r0, TransferMode::General);
    CHECK(((map.matrix * map.matrix) - map.matrix).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("general transfer scales by the distance ratio")
{
    const RobotDesign a = symmetric_design(4, 0.01, 0.1, "a");
    const RobotDesign b = symmetric_design(4, 0.025, 0.1, "b");
    oracle::Gen g(8);
    for (int k = 0; k < 50; ++k) {
        const JointVector in = random_feasible(g, a);
        const JointVector sym = transfer_symmetric(a, b, in);
        CHECK((transfer_general(a, b, in) - 2.5 * sym).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("general transfer is geometrically exact")
{
    const auto& designs = builtin_designs();
    oracle::Gen g(21);
    for (const auto& src : designs) {
        for (const auto& dst : designs) {
            const TransformPair ps(src), pd(dst);
            for (int k = 0; k < 20; ++k) {
                const double kappa = g.uniform(0.0, kPi / src.l);
                const double theta = g.uniform(-kPi, kPi);
                const JointVector in = oracle::joints_from_arc(src, kappa, theta);
                const JointVector out = transfer_general(ps, pd, in);
                // The target realizes the same arc: compare with the oracle joints.
                CHECK((out - oracle::joints_from_arc(dst, kappa, theta)).cwiseAbs().maxCoeff()
                      < 1e-14);
            }
        }
    }
}

TEST_CASE("transfer maps")
{
    const auto& designs = builtin_designs();
    for (const auto& src : designs) {
        for (const auto& dst : designs) {
            for (TransferMode mode : {TransferMode::Symmetric, TransferMode::General}) {
                const auto map = make_transfer_map(src, dst, mode);
                CHECK(map.matrix.rows() == static_cast<Eigen::Index>(dst.n()));
                CHECK(map.matrix.cols() == static_cast<Eigen::Index>(src.n()));
                CHECK(numerical_rank(map.matrix) == 2);
            }
        }
    }
    const auto map = make_transfer_map(*find_builtin("robot_0"), *find_builtin("robot_D"),
                                       TransferMode::General);
    oracle::Gen g(1);
    const JointVector in = random_feasible(g, map.source);
    CHECK((map.apply(in) - transfer_general(map.source, map.target, in)).cwiseAbs().maxCoeff()
          < 1e-16);
    CHECK_THROWS_AS((void)map.apply(JointVector::Zero(7)), DimensionMismatch);

    const auto j = to_json(map);
    CHECK(j["rows"] == 7);
    CHECK(j["cols"] == 3);
    CHECK(j["matrix"].size() == 21);
    CHECK(j["mode"] == "general");
    CHECK(parse_transfer_mode("symmetric") == TransferMode::Symmetric);
    CHECK_THROWS_AS(parse_transfer_mode("eq9"), InvalidParameter);
}

TEST_CASE("robot_A symmetric and general transfers coincide")
{
    const auto& r0 = *find_builtin("robot_0");
    const auto& ra = *find_builtin("robot_A");
    const auto sym = make_transfer_map(r0, ra, TransferMode::Symmetric);
    const auto gen = make_transfer_map(r0, ra, TransferMode::General);
    CHECK((sym.matrix - gen.matrix).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("perturbation analysis")
{
    const auto& r0 = *find_builtin("robot_0");
    const auto grid = polar_grid(kPi * r0.d.front(), 3, 8);
    CHECK(grid.size() == 24);

    PerturbedDesign exact{r0, r0.psi, r0.d};
    for (const auto& s : perturbation_analysis(exact, grid)) {
        CHECK(std::abs(s.delta_kappa_l) < 1e-13);
        CHECK(std::abs(s.delta_theta) < 1e-12);
    }

    // Joints placed twice as far out bend half as much for the same displacement.
    PerturbedDesign wide{r0, r0.psi, {0.02, 0.02, 0.02}};
    for (const auto& s : perturbation_analysis(wide, grid)) {
        CHECK(s.realized.kappa == doctest::Approx(s.commanded.kappa / 2).epsilon(1e-12));
        CHECK(std::abs(s.delta_theta) < 1e-12);
    }

    PerturbedDesign shifted{r0, r0.psi, r0.d};
    shifted.true_psi[0] += 0.05;
    double max_dtheta = 0.0;
    for (const auto& s : perturbation_analysis(shifted, grid)) {
        max_dtheta = std::max(max_dtheta, std::abs(s.delta_theta));
        // Oracle: least-squares arc of the true design for the same joints.
        const JointVector rho =
            oracle::joints_from_arc(r0, s.commanded.kappa, s.commanded.theta);
        const Eigen::Vector2d fit = oracle::arc_pair_fit(shifted.true_design(), rho);
        CHECK((fit - s.realized.curvature_pair()).norm() < 1e-10);
    }
    CHECK(max_dtheta > 1e-3);
}
