#include "clarke/control_sim.hpp"

#include <algorithm>
#include <cmath>

#include "clarke/errors.hpp"
#include "clarke/rng.hpp"

namespace clarke {

double step_pt1(const Pt1Actuator& actuator, double command, double dt)
{
    if (!(dt > 0.0))
        throw InvalidParameter("PT1 step needs dt > 0");
    if (!(actuator.time_constant > 0.0))
        throw InvalidParameter("PT1 time constant must be positive");
    const double alpha = -std::expm1(-dt / actuator.time_constant);
    return actuator.state + alpha * (command - actuator.state);
}

SimMode parse_sim_mode(std::string_view name)
{
    if (name == "open_loop_clean")
        return SimMode::OpenLoopClean;
    if (name == "open_loop_noisy")
        return SimMode::OpenLoopNoisy;
    if (name == "closed_loop")
        return SimMode::ClosedLoop;
    throw InvalidParameter("unknown simulation mode '" + std::string(name) + "'");
}

std::string_view sim_mode_name(SimMode mode)
{
    switch (mode) {
    case SimMode::OpenLoopClean: return "open_loop_clean";
    case SimMode::OpenLoopNoisy: return "open_loop_noisy";
    case SimMode::ClosedLoop: return "closed_loop";
    }
    return "?";
}

void SimConfig::validate() const
{
    if (!(dt > 0.0))
        throw InvalidParameter("dt must be positive");
    if (!(time_constant > 0.0))
        throw InvalidParameter("time constant must be positive");
    if (!(noise_eps >= 0.0))
        throw InvalidParameter("noise amplitude must be non-negative");
    if (!std::isfinite(kp) || !std::isfinite(kd))
        throw InvalidParameter("controller gains must be finite");
}

SimRun run(const Eigen::MatrixXd& desired, const RobotDesign& design, const SimConfig& config)
{
    config.validate();
    const TransformPair pair(design);
    const auto n = static_cast<Eigen::Index>(pair.n());
    if (desired.cols() != n)
        throw DimensionMismatch("desired stream has " + std::to_string(desired.cols())
                                + " columns, design '" + design.name + "' has "
                                + std::to_string(n) + " joints");
    const Eigen::Index ticks = desired.rows();

    SimRun out;
    out.robot = design.name;
    out.config = config;
    out.time.resize(static_cast<std::size_t>(ticks));
    out.desired = desired;
    out.measured.resize(ticks, n);
    out.commanded.resize(ticks, n);
    out.actual.resize(ticks, n);

    const bool noisy = config.mode != SimMode::OpenLoopClean && config.noise_eps > 0.0;
    const bool closed = config.mode == SimMode::ClosedLoop;
    SubstreamRng noise(config.seed, Stream::MeasurementNoise);
    const double alpha = -std::expm1(-config.dt / config.time_constant);

    JointVector state = ticks > 0 ? JointVector(desired.row(0).transpose()) : JointVector::Zero(n);
    Eigen::Vector2d previous_error = Eigen::Vector2d::Zero();
    for (Eigen::Index k = 0; k < ticks; ++k) {
        out.time[static_cast<std::size_t>(k)] = static_cast<double>(k) * config.dt;
        const JointVector target = desired.row(k).transpose();

        JointVector measured = state;
        if (noisy)
            for (Eigen::Index i = 0; i < n; ++i)
                measured[i] += noise.uniform(-config.noise_eps, config.noise_eps);

        JointVector command;
        if (closed) {
            const Eigen::Vector2d error = pair.arc_encoder() * (target - measured);
            if (k == 0)
                previous_error = error;
            const Eigen::Vector2d latent =
                config.kp * error + config.kd * (error - previous_error) / config.dt;
            previous_error = error;
            command = pair.arc_decoder() * latent;
        } else {
            command = target;
        }

        out.measured.row(k) = measured.transpose();
        out.commanded.row(k) = command.transpose();
        out.actual.row(k) = state.transpose();
        state += alpha * (command - state);
    }
    out.metrics = compute_metrics(out, pair, config.transient_cutoff);
    return out;
}

SimMetrics compute_metrics(const SimRun& run, const TransformPair& pair, double cutoff)
{
    const Eigen::Index n = run.desired.cols();
    SimMetrics m;
    m.transient_cutoff = cutoff;
    m.rms_per_joint.assign(static_cast<std::size_t>(n), 0.0);
    m.rms_measured_per_joint.assign(static_cast<std::size_t>(n), 0.0);
    m.final_error.assign(static_cast<std::size_t>(n), 0.0);

    double latent_sq = 0.0;
    std::size_t used = 0;
    for (std::size_t k = 0; k < run.time.size(); ++k) {
        if (!(run.time[k] > cutoff))
            continue;
        const auto row = static_cast<Eigen::Index>(k);
        const JointVector err = (run.actual.row(row) - run.desired.row(row)).transpose();
        const JointVector meas_err = (run.measured.row(row) - run.desired.row(row)).transpose();
        for (Eigen::Index i = 0; i < n; ++i) {
            m.rms_per_joint[static_cast<std::size_t>(i)] += err[i] * err[i];
            m.rms_measured_per_joint[static_cast<std::size_t>(i)] += meas_err[i] * meas_err[i];
            m.max_abs_err = std::max(m.max_abs_err, std::abs(err[i]));
        }
        latent_sq += (pair.arc_encoder() * err).squaredNorm();
        ++used;
    }
    if (used > 0) {
        const auto count = static_cast<double>(used);
        for (auto& v : m.rms_per_joint)
            v = std::sqrt(v / count);
        for (auto& v : m.rms_measured_per_joint)
            v = std::sqrt(v / count);
        m.rms_latent = std::sqrt(latent_sq / count);
    }
    if (!run.time.empty()) {
        const Eigen::Index last = static_cast<Eigen::Index>(run.time.size()) - 1;
        const JointVector err = (run.actual.row(last) - run.desired.row(last)).transpose();
        for (Eigen::Index i = 0; i < n; ++i)
            m.final_error[static_cast<std::size_t>(i)] = err[i];
        m.final_latent_error = (pair.arc_encoder() * err).norm();
    }
    return m;
}

}  // namespace clarke
