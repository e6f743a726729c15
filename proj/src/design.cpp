#include "clarke/design.hpp"

#include <cmath>
#include <numbers>

#include "clarke/errors.hpp"

namespace clarke {

void validate(const RobotDesign& design)
{
    const std::size_t n = design.n();
    if (n < 3)
        throw InvalidParameter("design '" + design.name + "': at least 3 joints required, got "
                               + std::to_string(n));
    if (design.d.size() != n)
        throw InvalidParameter("design '" + design.name + "': psi has " + std::to_string(n)
                               + " entries but d has " + std::to_string(design.d.size()));
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(design.psi[i]))
            throw InvalidParameter("design '" + design.name + "': non-finite psi");
        if (!(design.d[i] > 0.0) || !std::isfinite(design.d[i]))
            throw InvalidParameter("design '" + design.name + "': d_i must be positive");
    }
    if (!(design.l > 0.0) || !std::isfinite(design.l))
        throw InvalidParameter("design '" + design.name + "': l must be positive");
}

RobotDesign symmetric_design(int n, double d, double l, std::string name)
{
    if (n < 3)
        throw InvalidParameter("symmetric design needs n >= 3");
    if (!(d > 0.0) || !(l > 0.0))
        throw InvalidParameter("symmetric design needs d > 0 and l > 0");
    RobotDesign design;
    design.name = std::move(name);
    design.l = l;
    design.psi.resize(n);
    design.d.assign(n, d);
    for (int i = 0; i < n; ++i)
        design.psi[i] = 2.0 * std::numbers::pi * i / n;
    return design;
}

bool has_symmetric_angles(const RobotDesign& design, double tol)
{
    const auto n = static_cast<double>(design.n());
    for (std::size_t i = 0; i < design.n(); ++i) {
        const double expected = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
        if (std::abs(wrap_angle(design.psi[i] - expected)) > tol)
            return false;
    }
    return true;
}

bool has_constant_distance(const RobotDesign& design, double tol)
{
    for (double di : design.d)
        if (std::abs(di - design.d.front()) > tol * std::abs(design.d.front()))
            return false;
    return true;
}

double ClarkeCoordinates::magnitude() const
{
    return std::hypot(re, im);
}

Eigen::Vector2d ArcParameters::curvature_pair() const
{
    return {kappa * std::cos(theta), kappa * std::sin(theta)};
}

ArcParameters ArcParameters::from_pair(const Eigen::Vector2d& pair)
{
    const double kappa = std::hypot(pair.x(), pair.y());
    if (kappa == 0.0)
        return {0.0, 0.0};
    return {kappa, wrap_angle(std::atan2(pair.y(), pair.x()))};
}

double wrap_angle(double angle)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double wrapped = std::fmod(angle + std::numbers::pi, two_pi);
    if (wrapped < 0.0)
        wrapped += two_pi;
    wrapped -= std::numbers::pi;
    // fmod can land exactly on +pi after the shift
    if (wrapped >= std::numbers::pi)
        wrapped -= two_pi;
    return wrapped;
}

}  // namespace clarke
