#include "clarke/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "clarke/errors.hpp"

namespace clarke {

Eigen::MatrixX2d build_inverse_matrix(const RobotDesign& design)
{
    Eigen::MatrixX2d m(design.n(), 2);
    for (std::size_t i = 0; i < design.n(); ++i) {
        m(i, 0) = std::cos(design.psi[i]);
        m(i, 1) = std::sin(design.psi[i]);
    }
    return m;
}

double condition_number_2x2(const Eigen::Matrix2d& gram)
{
    const double a = gram(0, 0);
    const double b = 0.5 * (gram(0, 1) + gram(1, 0));
    const double c = gram(1, 1);
    const double mean = 0.5 * (a + c);
    const double radius = std::hypot(0.5 * (a - c), b);
    const double lo = mean - radius;
    const double hi = mean + radius;
    if (!(lo > 0.0))
        return std::numeric_limits<double>::infinity();
    return hi / lo;
}

Eigen::Matrix2Xd pseudoinverse(const Eigen::MatrixX2d& a)
{
    const Eigen::Matrix2d gram = a.transpose() * a;
    const double cond = condition_number_2x2(gram);
    if (!(cond < kDegeneracyCondition)) {
        std::ostringstream msg;
        msg << "Gram matrix condition number " << cond << " >= " << kDegeneracyCondition;
        throw DegenerateDesign(msg.str());
    }
    const double det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
    Eigen::Matrix2d gram_inv;
    gram_inv << gram(1, 1), -gram(0, 1), -gram(1, 0), gram(0, 0);
    gram_inv /= det;
    return gram_inv * a.transpose();
}

TransformPair::TransformPair(RobotDesign design)
    : design_(std::move(design))
{
    validate(design_);
    inverse_ = build_inverse_matrix(design_);
    gram_ = inverse_.transpose() * inverse_;
    condition_ = condition_number_2x2(gram_);
    if (!(condition_ < kDegeneracyCondition)) {
        std::ostringstream msg;
        msg << "design '" << design_.name << "' is degenerate: Gram condition number "
            << condition_;
        throw DegenerateDesign(msg.str());
    }
    forward_ = pseudoinverse(inverse_);

    const Eigen::Map<const Eigen::VectorXd> d(design_.d.data(), design_.n());
    arc_encoder_ = (forward_ * d.cwiseInverse().asDiagonal()) / design_.l;
    arc_decoder_ = design_.l * (d.asDiagonal() * inverse_);
}

TransformPair build_pair(const RobotDesign& design)
{
    return TransformPair(design);
}

namespace {

void check_length(const TransformPair& pair, const JointVector& joints)
{
    if (static_cast<std::size_t>(joints.size()) != pair.n())
        throw DimensionMismatch("design '" + pair.design().name + "' has "
                                + std::to_string(pair.n()) + " joints, got "
                                + std::to_string(joints.size()));
}

}  // namespace

ClarkeCoordinates forward(const TransformPair& pair, const JointVector& joints)
{
    check_length(pair, joints);
    return ClarkeCoordinates::from(pair.forward() * joints);
}

JointVector inverse(const TransformPair& pair, const ClarkeCoordinates& clarke)
{
    return pair.inverse() * clarke.vec();
}

ArcParameters to_arc(const TransformPair& pair, const JointVector& joints)
{
    check_length(pair, joints);
    return ArcParameters::from_pair(pair.arc_encoder() * joints);
}

ArcParameters to_arc(const RobotDesign& design, const JointVector& joints)
{
    return to_arc(TransformPair(design), joints);
}

JointVector from_arc(const TransformPair& pair, const ArcParameters& arc)
{
    return pair.arc_decoder() * arc.curvature_pair();
}

JointVector from_arc(const RobotDesign& design, const ArcParameters& arc)
{
    return from_arc(TransformPair(design), arc);
}

DistanceReducer parse_reducer(std::string_view name)
{
    if (name == "mean")
        return DistanceReducer::Mean;
    if (name == "max")
        return DistanceReducer::Max;
    if (name == "first")
        return DistanceReducer::First;
    throw InvalidParameter("unknown distance reducer '" + std::string(name)
                           + "' (expected mean, max or first)");
}

std::string_view reducer_name(DistanceReducer reducer)
{
    switch (reducer) {
    case DistanceReducer::Mean: return "mean";
    case DistanceReducer::Max: return "max";
    case DistanceReducer::First: return "first";
    }
    return "?";
}

double reduce_distances(const std::vector<double>& d, DistanceReducer reducer)
{
    if (d.empty())
        throw InvalidParameter("empty distance list");
    switch (reducer) {
    case DistanceReducer::Mean:
        return std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
    case DistanceReducer::Max:
        return *std::max_element(d.begin(), d.end());
    case DistanceReducer::First:
        return d.front();
    }
    throw InvalidParameter("unknown distance reducer");
}

ModifiedTransform build_modified_inverse(const RobotDesign& design, DistanceReducer reducer)
{
    validate(design);
    ModifiedTransform out;
    out.scale = reduce_distances(design.d, reducer);
    const Eigen::Map<const Eigen::VectorXd> d(design.d.data(), design.n());
    out.inverse = (d.asDiagonal() * build_inverse_matrix(design)) / out.scale;
    out.forward = pseudoinverse(out.inverse);
    return out;
}

}  // namespace clarke
