#include "clarke/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clarke/errors.hpp"

namespace clarke {

namespace smoothstep {

namespace {
double clamp01(double tau) { return std::clamp(tau, 0.0, 1.0); }
}  // namespace

namespace {
double lower_half(double t)
{
    const double t5 = t * t * t * t * t;
    return t5 * (126.0 + t * (-420.0 + t * (540.0 + t * (-315.0 + t * 70.0))));
}
}  // namespace

double value(double tau)
{
    // S(t) = 1 - S(1 - t); the polynomial is only evaluated on [0, 1/2],
    // where it has no cancellation.
    const double t = clamp01(tau);
    return t <= 0.5 ? lower_half(t) : 1.0 - lower_half(1.0 - t);
}

double slope(double tau)
{
    const double t = clamp01(tau);
    const double u = t * (1.0 - t);
    return 630.0 * u * u * u * u;
}

double curvature(double tau)
{
    const double t = clamp01(tau);
    const double u = t * (1.0 - t);
    return 2520.0 * u * u * u * (1.0 - 2.0 * t);
}

double integral(double tau)
{
    const double t = clamp01(tau);
    const double t6 = t * t * t * t * t * t;
    return t6 * (21.0 + t * (-60.0 + t * (67.5 + t * (-35.0 + t * 7.0))));
}

}  // namespace smoothstep

KinematicLimits KinematicLimits::evaluation_defaults()
{
    return {0.01 * std::numbers::pi, 0.125 * std::numbers::pi, 0.125 * std::numbers::pi};
}

void KinematicLimits::validate() const
{
    const auto ok = [](double x) { return x > 0.0 && std::isfinite(x); };
    if (!ok(v_max) || !ok(a_max) || !ok(dec_max))
        throw InvalidParameter("kinematic limits must be positive and finite");
}

namespace {

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

double TrajectoryState::position(double s) const
{
    if (s <= 0.0 || v == 0.0)
        return 0.0;
    if (s >= duration())
        return delta_rho;
    const double sgn = sign_of(delta_rho);
    if (s < t_lo)
        return sgn * v * t_lo * smoothstep::integral(s / t_lo);
    if (s < t_lo + t_cr)
        return sgn * v * (0.5 * t_lo + (s - t_lo));
    // tau - I(tau) = 1/2 - I(1 - tau)
    const double rest = 1.0 - (s - t_lo - t_cr) / t_sd;
    return sgn * v * (0.5 * t_lo + t_cr + t_sd * (0.5 - smoothstep::integral(rest)));
}

double TrajectoryState::velocity(double s) const
{
    if (s <= 0.0 || v == 0.0 || s >= duration())
        return 0.0;
    const double sgn = sign_of(delta_rho);
    if (s < t_lo)
        return sgn * v * smoothstep::value(s / t_lo);
    if (s < t_lo + t_cr)
        return sgn * v;
    return sgn * v * smoothstep::value(1.0 - (s - t_lo - t_cr) / t_sd);
}

double TrajectoryState::acceleration(double s) const
{
    if (s <= 0.0 || v == 0.0 || s >= duration())
        return 0.0;
    const double sgn = sign_of(delta_rho);
    if (s < t_lo)
        return sgn * v / t_lo * smoothstep::slope(s / t_lo);
    if (s < t_lo + t_cr)
        return 0.0;
    return -sgn * v / t_sd * smoothstep::slope((s - t_lo - t_cr) / t_sd);
}

TrajectoryState plan_segment(double delta, const KinematicLimits& limits)
{
    if (!std::isfinite(delta))
        throw InvalidParameter("segment displacement must be finite");
    limits.validate();

    TrajectoryState state;
    state.delta_rho = delta;
    const double distance = std::abs(delta);
    if (distance == 0.0)
        return state;

    constexpr double c = smoothstep::kMaxSlope;
    double v = limits.v_max;
    double t_lo = c * v / limits.a_max;
    double t_sd = c * v / limits.dec_max;
    const double ramp_distance = 0.5 * v * (t_lo + t_sd);
    double t_cr = 0.0;
    if (distance >= ramp_distance) {
        t_cr = (distance - ramp_distance) / v;
    } else {
        v = std::sqrt(2.0 * distance / (c * (1.0 / limits.a_max + 1.0 / limits.dec_max)));
        t_lo = c * v / limits.a_max;
        t_sd = c * v / limits.dec_max;
    }
    state.v = v;
    state.t_lo = t_lo;
    state.t_cr = t_cr;
    state.t_sd = t_sd;
    state.a = c * v / t_lo;
    state.dec = c * v / t_sd;
    return state;
}

std::vector<TrajectoryState> synchronize(std::vector<TrajectoryState> per_joint)
{
    if (per_joint.empty())
        return per_joint;
    const auto slowest = std::max_element(
        per_joint.begin(), per_joint.end(),
        [](const TrajectoryState& x, const TrajectoryState& y) { return x.duration() < y.duration(); });
    const TrajectoryState reference = *slowest;
    if (reference.duration() == 0.0)
        return per_joint;

    constexpr double c = smoothstep::kMaxSlope;
    const double effective_time = 0.5 * reference.t_lo + reference.t_cr + 0.5 * reference.t_sd;
    for (auto& state : per_joint) {
        const double delta = state.delta_rho;
        const double t_enb = state.t_enb;
        state = reference;
        state.delta_rho = delta;
        state.t_enb = t_enb;
        state.v = std::abs(delta) / effective_time;
        state.a = reference.t_lo > 0.0 ? c * state.v / reference.t_lo : 0.0;
        state.dec = reference.t_sd > 0.0 ? c * state.v / reference.t_sd : 0.0;
    }
    return per_joint;
}

namespace {

/// Duration and ramp times of one synchronized segment.
struct SegmentTiming {
    double duration = 0.0;
    double t_lo = 0.0;
    double t_sd = 0.0;
};

SegmentTiming timing_of(const std::vector<TrajectoryState>& segment)
{
    SegmentTiming timing;
    for (const auto& state : segment) {
        if (state.duration() > timing.duration) {
            timing.duration = state.duration();
            timing.t_lo = state.t_lo;
            timing.t_sd = state.t_sd;
        }
    }
    return timing;
}

}  // namespace

PlannedTrajectory blend(const JointVector& start,
                        std::vector<std::vector<TrajectoryState>> segments,
                        double overlap_fraction,
                        const std::optional<KinematicLimits>& limits)
{
    if (!(overlap_fraction >= 0.0 && overlap_fraction <= 1.0))
        throw InvalidParameter("overlap fraction must lie in [0, 1]");
    const auto n = static_cast<std::size_t>(start.size());
    for (const auto& segment : segments)
        if (segment.size() != n)
            throw InvalidParameter("every segment needs one state per joint");

    PlannedTrajectory traj;
    traj.start = start;
    traj.goal = start;
    traj.overlap_fraction = overlap_fraction;

    double t_enb = 0.0;
    for (std::size_t j = 0; j < segments.size(); ++j) {
        const SegmentTiming now = timing_of(segments[j]);
        for (std::size_t i = 0; i < n; ++i) {
            segments[j][i].t_enb = t_enb;
            traj.goal[i] += segments[j][i].delta_rho;
        }
        traj.horizon = std::max(traj.horizon, t_enb + now.duration);
        if (j + 1 < segments.size()) {
            const SegmentTiming next = timing_of(segments[j + 1]);
            t_enb += now.duration - overlap_fraction * std::min(now.t_sd, next.t_lo);
        }
    }
    traj.states = std::move(segments);

    if (limits)
        return enforce_limits(traj, *limits);
    return traj;
}

PlannedTrajectory plan_via_points(const std::vector<JointVector>& via_points,
                                  const KinematicLimits& limits, double overlap_fraction)
{
    if (via_points.empty())
        throw InvalidParameter("at least one via point is required");
    const auto n = via_points.front().size();
    std::vector<std::vector<TrajectoryState>> segments;
    for (std::size_t j = 1; j < via_points.size(); ++j) {
        if (via_points[j].size() != n)
            throw DimensionMismatch("via points have inconsistent joint counts");
        std::vector<TrajectoryState> per_joint;
        for (Eigen::Index i = 0; i < n; ++i)
            per_joint.push_back(plan_segment(via_points[j][i] - via_points[j - 1][i], limits));
        segments.push_back(synchronize(std::move(per_joint)));
    }
    PlannedTrajectory traj =
        blend(via_points.front(), std::move(segments), overlap_fraction, limits);
    traj.goal = via_points.back();
    return traj;
}

TrajectorySample evaluate(const PlannedTrajectory& traj, double t)
{
    if (!(t >= 0.0 && t <= traj.horizon))
        throw OutOfRange("time " + std::to_string(t) + " s outside [0, "
                         + std::to_string(traj.horizon) + "]");
    const auto n = static_cast<Eigen::Index>(traj.design_n());
    TrajectorySample out{traj.start, JointVector::Zero(n), JointVector::Zero(n)};
    if (t == traj.horizon) {
        out.position = traj.goal;
        return out;
    }
    for (const auto& segment : traj.states) {
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& state = segment[static_cast<std::size_t>(i)];
            const double s = t - state.t_enb;
            out.position[i] += state.position(s);
            out.velocity[i] += state.velocity(s);
            out.acceleration[i] += state.acceleration(s);
        }
    }
    return out;
}

PlannedTrajectory dilate(const PlannedTrajectory& traj, double factor)
{
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw InvalidParameter("dilation factor must be positive");
    PlannedTrajectory out = traj;
    for (auto& segment : out.states) {
        for (auto& state : segment) {
            state.t_lo *= factor;
            state.t_cr *= factor;
            state.t_sd *= factor;
            state.t_enb *= factor;
            state.v /= factor;
            state.a /= factor * factor;
            state.dec /= factor * factor;
        }
    }
    out.horizon *= factor;
    return out;
}

PlannedTrajectory align_to_grid(const PlannedTrajectory& traj, double dt)
{
    if (!(dt > 0.0))
        throw InvalidParameter("grid step must be positive");
    if (traj.horizon == 0.0)
        return traj;
    const double ticks = std::ceil(traj.horizon / dt);
    PlannedTrajectory out = dilate(traj, ticks * dt / traj.horizon);
    out.horizon = ticks * dt;
    return out;
}

PeakRates peak_rates(const PlannedTrajectory& traj, const Eigen::MatrixXd& map, double sample_dt)
{
    PeakRates peaks;
    const auto visit = [&](double t) {
        const TrajectorySample s = evaluate(traj, t);
        JointVector vel = s.velocity;
        JointVector acc = s.acceleration;
        if (map.size() != 0) {
            vel = map * s.velocity;
            acc = map * s.acceleration;
        }
        for (Eigen::Index i = 0; i < vel.size(); ++i) {
            peaks.velocity = std::max(peaks.velocity, std::abs(vel[i]));
            if (acc[i] * vel[i] >= 0.0)
                peaks.acceleration = std::max(peaks.acceleration, std::abs(acc[i]));
            else
                peaks.deceleration = std::max(peaks.deceleration, std::abs(acc[i]));
        }
    };
    const auto ticks = static_cast<long>(std::ceil(traj.horizon / sample_dt));
    for (long k = 0; k <= ticks; ++k)
        visit(std::min(static_cast<double>(k) * sample_dt, traj.horizon));
    // Mid-ramp instants carry the single-segment acceleration peaks.
    for (const auto& segment : traj.states) {
        for (const auto& state : segment) {
            for (double s : {0.5 * state.t_lo, state.t_lo + state.t_cr + 0.5 * state.t_sd}) {
                const double t = state.t_enb + s;
                if (t >= 0.0 && t <= traj.horizon)
                    visit(t);
            }
        }
    }
    return peaks;
}

double feasibility_factor(const PlannedTrajectory& traj, const KinematicLimits& limits,
                          const Eigen::MatrixXd& map, double sample_dt)
{
    limits.validate();
    const PeakRates peaks = peak_rates(traj, map, sample_dt);
    const double k = std::max({peaks.velocity / limits.v_max,
                               std::sqrt(peaks.acceleration / limits.a_max),
                               std::sqrt(peaks.deceleration / limits.dec_max)});
    if (k <= 1.0 + 1e-12)
        return 1.0;
    return k * (1.0 + 1e-6);
}

PlannedTrajectory enforce_limits(const PlannedTrajectory& traj, const KinematicLimits& limits,
                                 const Eigen::MatrixXd& map, double sample_dt)
{
    PlannedTrajectory out = traj;
    for (int pass = 0; pass < 4; ++pass) {
        const double k = feasibility_factor(out, limits, map, sample_dt);
        if (k == 1.0)
            break;
        out = dilate(out, k);
    }
    return out;
}

std::vector<double> boundary_times(const PlannedTrajectory& traj)
{
    std::vector<double> times;
    for (const auto& segment : traj.states) {
        const SegmentTiming timing = timing_of(segment);
        if (timing.duration == 0.0)
            continue;
        const TrajectoryState& s = *std::max_element(
            segment.begin(), segment.end(),
            [](const auto& x, const auto& y) { return x.duration() < y.duration(); });
        for (double offset : {0.0, s.t_lo, s.t_lo + s.t_cr, s.duration()})
            times.push_back(s.t_enb + offset);
    }
    std::sort(times.begin(), times.end());
    return times;
}

}  // namespace clarke
