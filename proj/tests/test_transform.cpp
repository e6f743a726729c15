#include <doctest.h>

#include "clarke/design_io.hpp"
#include "clarke/errors.hpp"
#include "clarke/registry.hpp"
#include "clarke/transform.hpp"
#include "oracles.hpp"

using namespace clarke;
using oracle::kPi;

TEST_CASE("inverse matrix rows")
{
    const auto m3 = build_inverse_matrix(symmetric_design(3, 0.01, 0.1));
    CHECK(m3(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(m3(0, 1)) < 1e-15);
    CHECK(m3(1, 0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(m3(1, 1) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(m3(2, 0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(m3(2, 1) == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-15));

    RobotDesign one{"one", {0.0}, {0.01}, 0.1};
    const auto m1 = build_inverse_matrix(one);
    CHECK(m1.rows() == 1);
    CHECK(m1(0, 0) == 1.0);
    CHECK(m1(0, 1) == 0.0);

    const auto m4 = build_inverse_matrix(symmetric_design(4, 0.01, 0.1));
    const double expected[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(m4(i, j) - expected[i][j]) < 1e-15);
}

TEST_CASE("pseudoinverse matches SVD oracle")
{
    oracle::Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto design = oracle::random_design(g, g.integer(3, 16));
        const auto a = build_inverse_matrix(design);
        const Eigen::MatrixXd diff = pseudoinverse(a) - oracle::svd_pinv(a);
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("symmetric forward matrix")
{
    const TransformPair pair(symmetric_design(3, 0.01, 0.1));
    const Eigen::Matrix2Xd& f = pair.forward();
    const double s3 = 1.0 / std::sqrt(3.0);
    CHECK(f(0, 0) == doctest::Approx(2.0 / 3).epsilon(1e-14));
    CHECK(f(0, 1) == doctest::Approx(-1.0 / 3).epsilon(1e-14));
    CHECK(f(0, 2) == doctest::Approx(-1.0 / 3).epsilon(1e-14));
    CHECK(std::abs(f(1, 0)) < 1e-15);
    CHECK(f(1, 1) == doctest::Approx(s3).epsilon(1e-14));
    CHECK(f(1, 2) == doctest::Approx(-s3).epsilon(1e-14));
}

TEST_CASE("degenerate and invalid designs")
{
    RobotDesign collinear{"c", {0.0, kPi, 0.0}, {0.01, 0.01, 0.01}, 0.1};
    CHECK_THROWS_AS(TransformPair{collinear}, DegenerateDesign);

    RobotDesign bad_d{"b", {0.0, 2.0, 4.0}, {0.01, -0.01, 0.01}, 0.1};
    CHECK_THROWS_AS(TransformPair{bad_d}, InvalidParameter);

    RobotDesign two{"t", {0.0, 1.0}, {0.01, 0.01}, 0.1};
    CHECK_THROWS_AS(TransformPair{two}, InvalidParameter);

    RobotDesign ragged{"r", {0.0, 2.0, 4.0}, {0.01, 0.01}, 0.1};
    CHECK_THROWS_AS(TransformPair{ragged}, InvalidParameter);

    RobotDesign no_l{"l", {0.0, 2.0, 4.0}, {0.01, 0.01, 0.01}, 0.0};
    CHECK_THROWS_AS(TransformPair{no_l}, InvalidParameter);

    // Nearly collinear: condition just above the threshold.
    RobotDesign near{"n", {0.0, 1e-5, kPi}, {0.01, 0.01, 0.01}, 0.1};
    CHECK_THROWS_AS(TransformPair{near}, DegenerateDesign);
}

TEST_CASE("forward and inverse examples")
{
    const TransformPair p3(symmetric_design(3, 0.01, 0.1));
    JointVector rho(3);
    rho << 1e-3, -0.5e-3, -0.5e-3;
    const auto c = forward(p3, rho);
    CHECK(c.re == doctest::Approx(1e-3).epsilon(1e-13));
    CHECK(std::abs(c.im) < 1e-18);
    CHECK(forward(p3, JointVector::Zero(3)).magnitude() == 0.0);

    const JointVector back = inverse(p3, {1e-3, 0.0});
    CHECK((back - rho).cwiseAbs().maxCoeff() < 1e-18);

    const TransformPair p4(symmetric_design(4, 0.01, 0.1));
    const JointVector r4 = inverse(p4, {0.0, 1e-3});
    JointVector e4(4);
    e4 << 0.0, 1e-3, 0.0, -1e-3;
    CHECK((r4 - e4).cwiseAbs().maxCoeff() < 1e-18);

    CHECK_THROWS_AS(forward(p3, JointVector::Zero(4)), DimensionMismatch);
}

TEST_CASE("property: right inverse and roundtrip")
{
    oracle::Gen g(5);
    for (int trial = 0; trial < 300; ++trial) {
        const TransformPair pair(oracle::random_design(g, g.integer(3, 16)));
        const Eigen::Matrix2d id = pair.forward() * pair.inverse();
        CHECK((id - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
        const ClarkeCoordinates c{g.uniform(-0.05, 0.05), g.uniform(-0.05, 0.05)};
        const auto back = forward(pair, inverse(pair, c));
        CHECK((back.vec() - c.vec()).norm() <= 1e-12 * c.vec().norm());
    }
}

TEST_CASE("arc mapping")
{
    const TransformPair p3(symmetric_design(3, 0.01, 0.1));
    const auto zero = to_arc(p3, JointVector::Zero(3));
    CHECK(zero.kappa == 0.0);
    CHECK(zero.theta == 0.0);
    CHECK(from_arc(p3, {0.0, 1.0}).cwiseAbs().maxCoeff() == 0.0);

    const JointVector half = from_arc(p3, {kPi / 0.1, 0.0});
    CHECK(half(0) == doctest::Approx(kPi * 0.01).epsilon(1e-14));
    CHECK(half(1) == doctest::Approx(-kPi * 0.005).epsilon(1e-14));
    CHECK(half(2) == doctest::Approx(-kPi * 0.005).epsilon(1e-14));

    // Per-joint scaling with d on robot_B.
    const auto& b = *find_builtin("robot_B");
    const JointVector rb = from_arc(b, {5.0, 0.3});
    const JointVector ref = oracle::joints_from_arc(b, 5.0, 0.3);
    CHECK((rb - ref).cwiseAbs().maxCoeff() < 1e-15);

    oracle::Gen g(9);
    for (int trial = 0; trial < 300; ++trial) {
        const auto design = oracle::random_design(g, g.integer(3, 12));
        const TransformPair pair(design);
        const ArcParameters a{g.uniform(1e-3, kPi / design.l), g.uniform(-kPi, kPi)};
        const JointVector rho = from_arc(pair, a);
        CHECK((rho - oracle::joints_from_arc(design, a.kappa, a.theta)).cwiseAbs().maxCoeff()
              < 1e-14);
        const ArcParameters back = to_arc(pair, rho);
        CHECK(back.kappa == doctest::Approx(a.kappa).epsilon(1e-12));
        CHECK(std::abs(wrap_angle(back.theta - a.theta)) < 1e-12);
        const Eigen::Vector2d fit = oracle::arc_pair_fit(design, rho);
        CHECK((fit - a.curvature_pair()).norm() < 1e-10 * a.kappa);
    }
}

TEST_CASE("wrap_angle range")
{
    CHECK(wrap_angle(kPi) == doctest::Approx(-kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(-kPi));
    CHECK(wrap_angle(3 * kPi + 0.1) == doctest::Approx(-kPi + 0.1));
    oracle::Gen g(2);
    for (int k = 0; k < 1000; ++k) {
        const double w = wrap_angle(g.uniform(-50, 50));
        CHECK(w >= -kPi);
        CHECK(w < kPi);
    }
}

TEST_CASE("modified transform")
{
    const auto& r0 = *find_builtin("robot_0");
    const auto mod = build_modified_inverse(r0, DistanceReducer::Mean);
    CHECK((mod.inverse - build_inverse_matrix(r0)).cwiseAbs().maxCoeff() < 1e-15);

    const auto& b = *find_builtin("robot_B");
    const auto mx = build_modified_inverse(b, DistanceReducer::Max);
    const auto base = build_inverse_matrix(b);
    const double scale[3] = {1.0, 0.7, 0.5};
    for (int i = 0; i < 3; ++i)
        CHECK((mx.inverse.row(i) - scale[i] * base.row(i)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(((mx.forward * mx.inverse) - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(parse_reducer("first") == DistanceReducer::First);
    CHECK_THROWS_AS(parse_reducer("median"), InvalidParameter);
}

TEST_CASE("design constructors and registry")
{
    const auto s5 = symmetric_design(5, 0.01, 0.1);
    for (int i = 0; i < 5; ++i)
        CHECK(s5.psi[static_cast<std::size_t>(i)]
              == doctest::Approx(2 * kPi * 0.2 * i).epsilon(1e-15));
    CHECK(has_symmetric_angles(s5));
    CHECK(has_constant_distance(s5));

    const auto& designs = builtin_designs();
    REQUIRE(designs.size() == 5);
    CHECK(designs[0].name == "robot_0");
    CHECK(designs[4].name == "robot_D");
    CHECK(designs[4].n() == 7);
    CHECK(designs[4].psi[2] == doctest::Approx(2 * kPi * 0.51));
    CHECK(designs[4].d[1] == doctest::Approx(0.001));
    CHECK(!has_symmetric_angles(designs[4]));
    CHECK(!has_constant_distance(designs[2]));
    CHECK(find_builtin("robot_X") == nullptr);
    for (const auto& d : designs)
        CHECK_NOTHROW(TransformPair{d});
}

TEST_CASE("design json")
{
    const auto& c = *find_builtin("robot_C");
    const RobotDesign back = design_from_json(design_to_json(c));
    CHECK(back.name == c.name);
    for (std::size_t i = 0; i < c.n(); ++i) {
        CHECK(back.psi[i] == c.psi[i]);
        CHECK(back.d[i] == doctest::Approx(c.d[i]).epsilon(1e-15));
    }
    nlohmann::json bad = design_to_json(c);
    bad["psi_rad"].erase(0);
    CHECK_THROWS_AS(design_from_json(bad), ParseError);
    nlohmann::json missing = design_to_json(c);
    missing.erase("l_m");
    CHECK_THROWS_AS(design_from_json(missing), ParseError);
    nlohmann::json neg = design_to_json(c);
    neg["d_mm"][0] = -1.0;
    CHECK_THROWS_AS(design_from_json(neg), InvalidParameter);
}
