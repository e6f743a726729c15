#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "clarke/design.hpp"

namespace clarke {

/// Gram matrices with a condition number at or above this are rejected.
inline constexpr double kDegeneracyCondition = 1e8;

/// n x 2 matrix with rows [cos(psi_i), sin(psi_i)]. Any n >= 1 is accepted.
Eigen::MatrixX2d build_inverse_matrix(const RobotDesign& design);

/// Condition number of a symmetric positive semi-definite 2x2 matrix
/// (ratio of its eigenvalues); infinity when singular.
double condition_number_2x2(const Eigen::Matrix2d& gram);

/// Moore-Penrose pseudoinverse of an n x 2 matrix of full column rank,
/// (A^T A)^-1 A^T, through the closed-form 2x2 inverse. Throws
/// DegenerateDesign when cond(A^T A) >= kDegeneracyCondition.
Eigen::Matrix2Xd pseudoinverse(const Eigen::MatrixX2d& a);

/// Forward (2 x n) and inverse (n x 2) generalized Clarke matrices of one
/// design. Immutable after construction.
class TransformPair {
public:
    /// Validates the design and builds both matrices.
    explicit TransformPair(RobotDesign design);

    [[nodiscard]] const RobotDesign& design() const { return design_; }
    [[nodiscard]] std::size_t n() const { return design_.n(); }
    [[nodiscard]] const Eigen::Matrix2Xd& forward() const { return forward_; }
    [[nodiscard]] const Eigen::MatrixX2d& inverse() const { return inverse_; }
    [[nodiscard]] const Eigen::Matrix2d& gram() const { return gram_; }
    [[nodiscard]] double condition() const { return condition_; }

    /// (1/l) * M_P * diag(1/d_i): joints -> curvature pair.
    [[nodiscard]] const Eigen::Matrix2Xd& arc_encoder() const { return arc_encoder_; }
    /// l * diag(d_i) * M_P^-1: curvature pair -> joints.
    [[nodiscard]] const Eigen::MatrixX2d& arc_decoder() const { return arc_decoder_; }

private:
    RobotDesign design_;
    Eigen::MatrixX2d inverse_;
    Eigen::Matrix2Xd forward_;
    Eigen::Matrix2d gram_;
    double condition_ = 0.0;
    Eigen::Matrix2Xd arc_encoder_;
    Eigen::MatrixX2d arc_decoder_;
};

TransformPair build_pair(const RobotDesign& design);

/// rho_bar = M_P * rho. Throws DimensionMismatch.
ClarkeCoordinates forward(const TransformPair& pair, const JointVector& joints);

/// rho = M_P^-1 * rho_bar, i.e. rho_i = re*cos(psi_i) + im*sin(psi_i).
JointVector inverse(const TransformPair& pair, const ClarkeCoordinates& clarke);

/// Robot-dependent mapping joints -> (kappa, theta). Throws DimensionMismatch.
ArcParameters to_arc(const TransformPair& pair, const JointVector& joints);
ArcParameters to_arc(const RobotDesign& design, const JointVector& joints);

/// Inverse robot-dependent mapping (kappa, theta) -> joints.
JointVector from_arc(const TransformPair& pair, const ArcParameters& arc);
JointVector from_arc(const RobotDesign& design, const ArcParameters& arc);

/// Scalar reducer f(d_i) used by the modified transform.
enum class DistanceReducer { Mean, Max, First };

DistanceReducer parse_reducer(std::string_view name);
std::string_view reducer_name(DistanceReducer reducer);
double reduce_distances(const std::vector<double>& d, DistanceReducer reducer);

/// (1/f(d)) * diag(d_i) * M_P^-1 together with its pseudoinverse.
struct ModifiedTransform {
    Eigen::MatrixX2d inverse;
    Eigen::Matrix2Xd forward;
    double scale = 0.0;  ///< f(d), meters
};

ModifiedTransform build_modified_inverse(const RobotDesign& design,
                                         DistanceReducer reducer = DistanceReducer::Mean);

}  // namespace clarke
