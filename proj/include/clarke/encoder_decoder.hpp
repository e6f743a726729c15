#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "clarke/transform.hpp"

namespace clarke {

/// Symmetric: latent = Clarke coordinates, design parameters d and l ignored.
/// General: latent = curvature pair, d and l of both designs compensated.
enum class TransferMode { Symmetric, General };

TransferMode parse_transfer_mode(std::string_view name);
std::string_view transfer_mode_name(TransferMode mode);

/// M_P^-1(target) * M_P(source) * rho.
JointVector transfer_symmetric(const TransformPair& source, const TransformPair& target,
                               const JointVector& joints);
JointVector transfer_symmetric(const RobotDesign& source, const RobotDesign& target,
                               const JointVector& joints);

/// l_B diag(d_B) M_P^-1(B) * (1/l_A) M_P(A) diag(1/d_A) * rho.
JointVector transfer_general(const TransformPair& source, const TransformPair& target,
                             const JointVector& joints);
JointVector transfer_general(const RobotDesign& source, const RobotDesign& target,
                             const JointVector& joints);

/// Precomposed encoder-decoder, target.n x source.n, rank 2.
struct TransferMap {
    RobotDesign source;
    RobotDesign target;
    Eigen::MatrixXd matrix;
    TransferMode mode = TransferMode::General;

    /// Throws DimensionMismatch.
    [[nodiscard]] JointVector apply(const JointVector& joints) const;
};

TransferMap make_transfer_map(const RobotDesign& source, const RobotDesign& target,
                              TransferMode mode);
TransferMap make_transfer_map(const TransformPair& source, const TransformPair& target,
                              TransferMode mode);

/// {source, target, mode, rows, cols, matrix (row-major)}.
nlohmann::json to_json(const TransferMap& map);

/// Nominal design plus the true joint locations.
struct PerturbedDesign {
    RobotDesign nominal;
    std::vector<double> true_psi;
    std::vector<double> true_d;

    [[nodiscard]] RobotDesign true_design() const;
};

struct PerturbationSample {
    ClarkeCoordinates grid_point;
    ArcParameters commanded;
    ArcParameters realized;
    double delta_kappa_l = 0.0;  ///< (kappa_realized - kappa_commanded) * l
    double delta_theta = 0.0;    ///< wrapped to [-pi, pi)
};

/// Commands each grid point on the nominal design and reads back the arc the
/// true design realizes. A grid point c is a latent displacement pair; the
/// commanded curvature pair is c / (l * mean(d_nominal)).
std::vector<PerturbationSample> perturbation_analysis(const PerturbedDesign& p,
                                                      const std::vector<ClarkeCoordinates>& grid);

/// Polar grid of latent pairs: radii (0, max_radius] in `rings` steps,
/// `spokes` angles from -pi.
std::vector<ClarkeCoordinates> polar_grid(double max_radius, int rings, int spokes);

}  // namespace clarke
