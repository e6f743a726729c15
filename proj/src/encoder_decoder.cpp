#include "clarke/encoder_decoder.hpp"

#include <numbers>

#include "clarke/errors.hpp"

namespace clarke {

TransferMode parse_transfer_mode(std::string_view name)
{
    if (name == "symmetric")
        return TransferMode::Symmetric;
    if (name == "general")
        return TransferMode::General;
    throw InvalidParameter("unknown transfer mode '" + std::string(name)
                           + "' (expected symmetric or general)");
}

std::string_view transfer_mode_name(TransferMode mode)
{
    return mode == TransferMode::Symmetric ? "symmetric" : "general";
}

namespace {

void check_source(const TransformPair& source, const JointVector& joints)
{
    if (static_cast<std::size_t>(joints.size()) != source.n())
        throw DimensionMismatch("source design '" + source.design().name + "' has "
                                + std::to_string(source.n()) + " joints, got "
                                + std::to_string(joints.size()));
}

}  // namespace

JointVector transfer_symmetric(const TransformPair& source, const TransformPair& target,
                               const JointVector& joints)
{
    check_source(source, joints);
    return target.inverse() * (source.forward() * joints);
}

JointVector transfer_symmetric(const RobotDesign& source, const RobotDesign& target,
                               const JointVector& joints)
{
    return transfer_symmetric(TransformPair(source), TransformPair(target), joints);
}

JointVector transfer_general(const TransformPair& source, const TransformPair& target,
                             const JointVector& joints)
{
    check_source(source, joints);
    return target.arc_decoder() * (source.arc_encoder() * joints);
}

JointVector transfer_general(const RobotDesign& source, const RobotDesign& target,
                             const JointVector& joints)
{
    return transfer_general(TransformPair(source), TransformPair(target), joints);
}

JointVector TransferMap::apply(const JointVector& joints) const
{
    if (joints.size() != matrix.cols())
        throw DimensionMismatch("transfer map expects " + std::to_string(matrix.cols())
                                + " joints, got " + std::to_string(joints.size()));
    return matrix * joints;
}

TransferMap make_transfer_map(const TransformPair& source, const TransformPair& target,
                              TransferMode mode)
{
    TransferMap map;
    map.source = source.design();
    map.target = target.design();
    map.mode = mode;
    if (mode == TransferMode::Symmetric)
        map.matrix = target.inverse() * source.forward();
    else
        map.matrix = target.arc_decoder() * source.arc_encoder();
    return map;
}

TransferMap make_transfer_map(const RobotDesign& source, const RobotDesign& target,
                              TransferMode mode)
{
    return make_transfer_map(TransformPair(source), TransformPair(target), mode);
}

nlohmann::json to_json(const TransferMap& map)
{
    std::vector<double> row_major;
    row_major.reserve(map.matrix.size());
    for (Eigen::Index r = 0; r < map.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < map.matrix.cols(); ++c)
            row_major.push_back(map.matrix(r, c));
    return {{"source", map.source.name},
            {"target", map.target.name},
            {"mode", transfer_mode_name(map.mode)},
            {"rows", map.matrix.rows()},
            {"cols", map.matrix.cols()},
            {"matrix", row_major}};
}

RobotDesign PerturbedDesign::true_design() const
{
    RobotDesign t = nominal;
    t.name = nominal.name + "_true";
    t.psi = true_psi;
    t.d = true_d;
    if (t.psi.size() != nominal.n() || t.d.size() != nominal.n())
        throw DimensionMismatch("perturbed design must keep n = " + std::to_string(nominal.n()));
    return t;
}

std::vector<PerturbationSample> perturbation_analysis(const PerturbedDesign& p,
                                                      const std::vector<ClarkeCoordinates>& grid)
{
    const TransformPair nominal(p.nominal);
    const TransformPair actual(p.true_design());
    const double scale =
        1.0 / (p.nominal.l * reduce_distances(p.nominal.d, DistanceReducer::Mean));

    std::vector<PerturbationSample> out;
    out.reserve(grid.size());
    for (const auto& c : grid) {
        PerturbationSample s;
        s.grid_point = c;
        s.commanded = ArcParameters::from_pair(c.vec() * scale);
        const JointVector joints = from_arc(nominal, s.commanded);
        s.realized = to_arc(actual, joints);
        s.delta_kappa_l = (s.realized.kappa - s.commanded.kappa) * p.nominal.l;
        s.delta_theta = wrap_angle(s.realized.theta - s.commanded.theta);
        out.push_back(s);
    }
    return out;
}

std::vector<ClarkeCoordinates> polar_grid(double max_radius, int rings, int spokes)
{
    if (rings < 1 || spokes < 1 || !(max_radius > 0.0))
        throw InvalidParameter("polar grid needs rings, spokes >= 1 and a positive radius");
    std::vector<ClarkeCoordinates> grid;
    for (int r = 1; r <= rings; ++r) {
        const double radius = max_radius * r / rings;
        for (int s = 0; s < spokes; ++s) {
            const double angle = -std::numbers::pi + 2.0 * std::numbers::pi * s / spokes;
            grid.push_back({radius * std::cos(angle), radius * std::sin(angle)});
        }
    }
    return grid;
}

}  // namespace clarke
