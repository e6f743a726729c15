#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "clarke/design_io.hpp"
#include "clarke/errors.hpp"
#include "clarke/registry.hpp"
#include "manifest.hpp"

namespace clarke::cli {

namespace fs = std::filesystem;

fs::path default_output_dir()
{
    if (const char* env = std::getenv("CLARKE_OUT_DIR"); env && *env)
        return env;
    return "out";
}

std::vector<std::string> sample_header(std::size_t n)
{
    std::vector<std::string> h{"sample_idx", "rho_re_m", "rho_im_m"};
    for (std::size_t i = 1; i <= n; ++i)
        h.push_back("rho_" + std::to_string(i) + "_m");
    return h;
}

std::vector<std::string> trajectory_header(std::size_t n)
{
    std::vector<std::string> h{"t_s"};
    for (std::size_t i = 1; i <= n; ++i) {
        const auto idx = std::to_string(i);
        h.push_back("rho_" + idx + "_m");
        h.push_back("vel_" + idx + "_mps");
        h.push_back("acc_" + idx + "_mps2");
    }
    return h;
}

std::vector<std::string> simrun_header(std::size_t n)
{
    std::vector<std::string> h{"t_s"};
    for (const char* prefix : {"rho_d_", "rho_meas_", "rho_cmd_", "rho_true_"})
        for (std::size_t i = 1; i <= n; ++i)
            h.push_back(prefix + std::to_string(i));
    return h;
}

std::vector<std::string> perturbation_header()
{
    return {"grid_re_m",  "grid_im_m",    "kappa_cmd_inv_m", "theta_cmd_rad",
            "kappa_real_inv_m", "theta_real_rad", "delta_kappa_l", "delta_theta_rad"};
}

CsvTable sample_table(const JointSamples& samples)
{
    CsvTable table;
    table.header = sample_header(static_cast<std::size_t>(samples.joints.cols()));
    for (std::size_t k = 0; k < samples.batch.count(); ++k) {
        std::vector<double> row{static_cast<double>(k), samples.batch.clarke[k].re,
                                samples.batch.clarke[k].im};
        for (Eigen::Index i = 0; i < samples.joints.cols(); ++i)
            row.push_back(samples.joints(static_cast<Eigen::Index>(k), i));
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable trajectory_table(const std::vector<double>& time, const Eigen::MatrixXd& position,
                          const Eigen::MatrixXd& velocity, const Eigen::MatrixXd& acceleration)
{
    CsvTable table;
    const auto n = position.cols();
    table.header = trajectory_header(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < time.size(); ++k) {
        const auto r = static_cast<Eigen::Index>(k);
        std::vector<double> row{time[k]};
        for (Eigen::Index i = 0; i < n; ++i) {
            row.push_back(position(r, i));
            row.push_back(velocity(r, i));
            row.push_back(acceleration(r, i));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable simrun_table(const SimRun& run)
{
    CsvTable table;
    const auto n = run.desired.cols();
    table.header = simrun_header(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < run.time.size(); ++k) {
        const auto r = static_cast<Eigen::Index>(k);
        std::vector<double> row{run.time[k]};
        for (const Eigen::MatrixXd* m : {&run.desired, &run.measured, &run.commanded, &run.actual})
            for (Eigen::Index i = 0; i < n; ++i)
                row.push_back((*m)(r, i));
        table.rows.push_back(std::move(row));
    }
    return table;
}

nlohmann::json metrics_json(const SimRun& run)
{
    return {{"robot", run.robot},
            {"mode", sim_mode_name(run.config.mode)},
            {"transfer_mode", transfer_mode_name(run.config.transfer_mode)},
            {"seed", run.config.seed},
            {"rms_per_joint_m", run.metrics.rms_per_joint},
            {"rms_measured_per_joint_m", run.metrics.rms_measured_per_joint},
            {"rms_latent", run.metrics.rms_latent},
            {"max_abs_err_m", run.metrics.max_abs_err},
            {"final_error_m", run.metrics.final_error},
            {"transient_cutoff_s", run.metrics.transient_cutoff}};
}

void validate_metrics_json(const nlohmann::json& j)
{
    for (const char* key : {"robot", "mode", "transfer_mode", "seed", "rms_per_joint_m",
                            "rms_latent", "max_abs_err_m", "transient_cutoff_s"})
        if (!j.contains(key))
            throw ParseError(std::string("metrics: missing key '") + key + "'");
    if (!j.at("rms_per_joint_m").is_array())
        throw ParseError("metrics: rms_per_joint_m must be an array");
}

namespace {

std::string design_hash(const RobotDesign& design)
{
    return sha256_hex(design_to_json(design).dump());
}

std::string join(const std::vector<double>& values, double scale = 1.0)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ' ';
        s += format_double(values[i] * scale);
    }
    return s;
}

std::string join(const JointVector& values)
{
    return join(std::vector<double>(values.data(), values.data() + values.size()));
}

/// Writes a CSV and re-reads it against its schema.
void emit_csv(const fs::path& path, const CsvTable& table, std::vector<fs::path>& outputs)
{
    write_csv(path, table);
    const CsvTable back = validate_csv(path, table.header);
    if (back.rows.size() != table.rows.size())
        throw ParseError(path.string() + ": row count changed on re-read");
    outputs.push_back(path);
}

void emit_json(const fs::path& path, const nlohmann::json& j, std::vector<fs::path>& outputs)
{
    write_text_atomic(path, j.dump(2) + "\n");
    std::ifstream in(path);
    nlohmann::json back;
    try {
        in >> back;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (back != j)
        throw ParseError(path.string() + ": JSON changed on re-read");
    outputs.push_back(path);
}

void emit_metrics(const fs::path& path, const SimRun& run, std::vector<fs::path>& outputs)
{
    const auto j = metrics_json(run);
    validate_metrics_json(j);
    emit_json(path, j, outputs);
}

// ---------------------------------------------------------------------------

int cmd_design_check(const std::string& design_ref, std::ostream& out)
{
    const RobotDesign design = resolve_design(design_ref);
    std::vector<double> d_mm;
    for (double di : design.d)
        d_mm.push_back(di * 1e3);
    out << "name: " << design.name << '\n'
        << "n: " << design.n() << '\n'
        << "psi_rad: " << join(design.psi) << '\n'
        << "d_mm: " << join(d_mm) << '\n'
        << "l_m: " << format_double(design.l) << '\n'
        << "asymmetric_psi: " << std::boolalpha << !has_symmetric_angles(design) << '\n'
        << "non_constant_d: " << !has_constant_distance(design) << '\n';
    const Eigen::MatrixX2d inv = build_inverse_matrix(design);
    const double cond = condition_number_2x2(inv.transpose() * inv);
    out << "gram_condition: " << format_double(cond) << '\n';
    const TransformPair pair(design);  // throws DegenerateDesign
    out << "status: ok\n";
    return kOk;
}

int cmd_transform(const std::string& design_ref, const std::vector<double>& clarke_in,
                  const std::vector<double>& joints_in, bool arc, std::ostream& out)
{
    const TransformPair pair(resolve_design(design_ref));
    if (!clarke_in.empty() == !joints_in.empty())
        throw ParseError("give exactly one of --clarke or --joints");

    ClarkeCoordinates c;
    JointVector joints;
    double roundtrip = 0.0;
    if (!clarke_in.empty()) {
        c = {clarke_in[0], clarke_in[1]};
        joints = inverse(pair, c);
        roundtrip = (forward(pair, joints).vec() - c.vec()).cwiseAbs().maxCoeff();
    } else {
        joints = Eigen::Map<const JointVector>(joints_in.data(),
                                               static_cast<Eigen::Index>(joints_in.size()));
        c = forward(pair, joints);
        roundtrip = (inverse(pair, c) - pair.inverse() * (pair.forward() * joints))
                        .cwiseAbs()
                        .maxCoeff();
    }
    out << "design: " << pair.design().name << '\n'
        << "clarke_m: " << format_double(c.re) << ' ' << format_double(c.im) << '\n'
        << "joints_m: " << join(joints) << '\n'
        << "roundtrip_error: " << format_double(roundtrip) << '\n';
    if (arc) {
        const ArcParameters a = to_arc(pair, joints);
        out << "kappa_inv_m: " << format_double(a.kappa) << '\n'
            << "theta_rad: " << format_double(a.theta) << '\n';
    }
    return kOk;
}

int cmd_sample(const std::string& design_ref, std::size_t count, std::uint64_t seed,
               const fs::path& path, const std::vector<std::string>& argv, std::ostream& out)
{
    const RobotDesign design = resolve_design(design_ref);
    const JointSamples samples = sample_joints(design, seed, count);
    RunManifest manifest;
    manifest.command_line = argv;
    manifest.config = {{"design", design.name}, {"count", count}};
    manifest.seeds = {seed};
    manifest.design_hashes[design.name] = design_hash(design);
    emit_csv(path, sample_table(samples), manifest.outputs);
    const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
    auto manifest_path = path;
    manifest_path += ".manifest.json";
    manifest.write(manifest_path, base);
    out << "wrote " << count << " samples to " << path.string() << '\n';
    return kOk;
}

std::vector<JointVector> read_via_file(const fs::path& path, std::size_t n)
{
    const CsvTable table = read_csv(path);
    if (table.header.size() != n)
        throw DimensionMismatch(path.string() + ": expected " + std::to_string(n)
                                + " columns, got " + std::to_string(table.header.size()));
    std::vector<JointVector> via;
    for (const auto& row : table.rows)
        via.emplace_back(Eigen::Map<const JointVector>(row.data(), static_cast<Eigen::Index>(n)));
    if (via.size() < 2)
        throw ParseError(path.string() + ": at least two via points are required");
    return via;
}

struct TrajOptions {
    std::string design;
    std::string via_file;
    int sample_segments = 0;
    std::uint64_t seed = 0;
    KinematicLimits limits = KinematicLimits::evaluation_defaults();
    double overlap = 0.5;
    double rate_hz = 1000.0;
    std::string out;
};

int cmd_traj(const TrajOptions& opt, const std::vector<std::string>& argv, std::ostream& out)
{
    const RobotDesign design = resolve_design(opt.design);
    opt.limits.validate();
    if (!(opt.rate_hz > 0.0))
        throw InvalidParameter("--rate must be positive");
    std::vector<JointVector> via;
    if (!opt.via_file.empty()) {
        via = read_via_file(opt.via_file, design.n());
    } else {
        if (opt.sample_segments < 1)
            throw ParseError("give --via-file or --sample m with m >= 1");
        const JointSamples s =
            sample_joints(design, opt.seed, static_cast<std::size_t>(opt.sample_segments) + 1);
        for (Eigen::Index k = 0; k < s.joints.rows(); ++k)
            via.emplace_back(s.joints.row(k).transpose());
    }
    const double dt = 1.0 / opt.rate_hz;
    const PlannedTrajectory traj =
        align_to_grid(plan_via_points(via, opt.limits, opt.overlap), dt);
    const auto ticks = static_cast<std::size_t>(std::llround(traj.horizon / dt)) + 1;
    const auto grid = kernels::sample_trajectory(traj, dt, ticks, Exec::Parallel);

    RunManifest manifest;
    manifest.command_line = argv;
    manifest.config = {{"design", design.name},
                       {"v_max", opt.limits.v_max},
                       {"a_max", opt.limits.a_max},
                       {"dec_max", opt.limits.dec_max},
                       {"overlap", opt.overlap},
                       {"rate_hz", opt.rate_hz},
                       {"via_file", opt.via_file},
                       {"sample_segments", opt.sample_segments}};
    manifest.seeds = {opt.seed};
    manifest.design_hashes[design.name] = design_hash(design);
    const fs::path path = opt.out;
    emit_csv(path,
             trajectory_table(grid.time, grid.position, grid.velocity, grid.acceleration),
             manifest.outputs);
    auto manifest_path = path;
    manifest_path += ".manifest.json";
    manifest.write(manifest_path, path.has_parent_path() ? path.parent_path() : fs::path("."));
    out << "horizon_s: " << format_double(traj.horizon) << '\n'
        << "segments: " << traj.segments() << '\n'
        << "wrote " << ticks << " rows to " << path.string() << '\n';
    return kOk;
}

struct SimulateOptions {
    std::string surrogate;
    std::string target;
    std::string mode = "all";
    std::string transfer = "general";
    std::uint64_t seed = 0;
    std::string out_dir;
};

int cmd_simulate(const SimulateOptions& opt, const std::vector<std::string>& argv,
                 std::ostream& out)
{
    const RobotDesign surrogate = resolve_design(opt.surrogate);
    const RobotDesign target = resolve_design(opt.target);
    const TransferMode transfer = parse_transfer_mode(opt.transfer);
    std::vector<SimMode> modes;
    if (opt.mode == "all")
        modes.assign(std::begin(kAllSimModes), std::end(kAllSimModes));
    else
        modes.push_back(parse_sim_mode(opt.mode));

    const ExperimentConfig config;
    const ExperimentResult result = run_experiment(surrogate, target, opt.seed, transfer, config);
    const fs::path dir = opt.out_dir.empty() ? default_output_dir() : fs::path(opt.out_dir);

    RunManifest manifest;
    manifest.command_line = argv;
    manifest.config = {{"surrogate", surrogate.name},
                       {"target", target.name},
                       {"transfer_mode", opt.transfer},
                       {"modes", opt.mode},
                       {"dt", config.sim.dt},
                       {"kp", config.sim.kp},
                       {"kd", config.sim.kd},
                       {"noise_eps", config.sim.noise_eps},
                       {"time_constant", config.sim.time_constant},
                       {"transient_cutoff_s", config.sim.transient_cutoff}};
    manifest.seeds = {opt.seed};
    manifest.design_hashes[surrogate.name] = design_hash(surrogate);
    manifest.design_hashes[target.name] = design_hash(target);

    const std::string stem = target.name + "_" + std::string(transfer_mode_name(transfer));
    for (std::size_t m = 0; m < std::size(kAllSimModes); ++m) {
        if (std::find(modes.begin(), modes.end(), kAllSimModes[m]) == modes.end())
            continue;
        const SimRun& run = result.runs[m];
        const std::string name = stem + "_" + std::string(sim_mode_name(run.config.mode));
        emit_csv(dir / (name + ".csv"), simrun_table(run), manifest.outputs);
        emit_metrics(dir / (name + "_metrics.json"), run, manifest.outputs);
        out << sim_mode_name(run.config.mode) << " rms_per_joint_m: "
            << join(run.metrics.rms_per_joint) << '\n';
    }
    manifest.write(dir / (stem + "_manifest.json"), dir);
    return kOk;
}

}  // namespace

// ---------------------------------------------------------------------------

nlohmann::json run_demo(const fs::path& out_dir, std::uint64_t seed,
                        const std::vector<std::string>& command_line)
{
    const auto& designs = builtin_designs();
    const RobotDesign& surrogate = designs.front();
    const ExperimentConfig config;
    const TransferMode transfers[] = {TransferMode::General, TransferMode::Symmetric};

    struct Job {
        const RobotDesign* target;
        TransferMode transfer;
    };
    std::vector<Job> jobs;
    for (const auto& target : designs)
        for (TransferMode t : transfers)
            jobs.push_back({&target, t});

    struct JobOutput {
        std::vector<fs::path> files;
        std::array<SimMetrics, 3> metrics;
        Eigen::MatrixXd desired;
        double dilation = 1.0;
        double horizon = 0.0;
        double peak_velocity = 0.0;
    };
    std::vector<JobOutput> results(jobs.size());
    std::vector<std::exception_ptr> failures(jobs.size());

    // Independent experiments; each writes only its own files.
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < static_cast<long>(jobs.size()); ++j) {
        const auto idx = static_cast<std::size_t>(j);
        try {
            const Job& job = jobs[idx];
            const ExperimentResult r =
                run_experiment(surrogate, *job.target, seed, job.transfer, config, Exec::Serial);
            JobOutput& o = results[idx];
            const fs::path dir =
                out_dir / job.target->name / std::string(transfer_mode_name(job.transfer));
            const Eigen::MatrixXd desired_acc =
                kernels::map_stream(r.transfer.matrix, r.surrogate_grid.acceleration, Exec::Serial);
            emit_csv(dir / "transformed_trajectory.csv",
                     trajectory_table(r.surrogate_grid.time, r.desired, r.desired_velocity,
                                      desired_acc),
                     o.files);
            emit_json(dir / "transfer_map.json", to_json(r.transfer), o.files);
            for (std::size_t m = 0; m < r.runs.size(); ++m) {
                const std::string name(sim_mode_name(r.runs[m].config.mode));
                emit_csv(dir / (name + ".csv"), simrun_table(r.runs[m]), o.files);
                emit_metrics(dir / (name + "_metrics.json"), r.runs[m], o.files);
                o.metrics[m] = r.runs[m].metrics;
            }
            if (job.target == &surrogate && job.transfer == TransferMode::General) {
                emit_csv(out_dir / "surrogate_trajectory.csv",
                         trajectory_table(r.surrogate_grid.time, r.surrogate_grid.position,
                                          r.surrogate_grid.velocity,
                                          r.surrogate_grid.acceleration),
                         o.files);
                emit_csv(out_dir / "surrogate_via_points.csv", sample_table(r.via_points), o.files);
            }
            o.desired = r.desired;
            o.dilation = r.target_dilation;
            o.horizon = r.trajectory.horizon;
            o.peak_velocity = r.desired_velocity.cwiseAbs().maxCoeff();
        } catch (...) {
            failures[idx] = std::current_exception();
        }
    }
    for (const auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    RunManifest manifest;
    manifest.command_line = command_line;
    manifest.seeds = {seed};
    manifest.config = {{"surrogate", surrogate.name},
                       {"segments", config.segments},
                       {"overlap", config.overlap_fraction},
                       {"v_max", config.limits.v_max},
                       {"a_max", config.limits.a_max},
                       {"dec_max", config.limits.dec_max},
                       {"dt", config.sim.dt},
                       {"kp", config.sim.kp},
                       {"kd", config.sim.kd},
                       {"noise_eps", config.sim.noise_eps},
                       {"time_constant", config.sim.time_constant},
                       {"transient_cutoff_s", config.sim.transient_cutoff}};
    for (const auto& d : designs) {
        manifest.design_hashes[d.name] = design_hash(d);
        emit_json(out_dir / "designs" / (d.name + ".json"), design_to_json(d), manifest.outputs);
    }
    for (auto& r : results)
        manifest.outputs.insert(manifest.outputs.end(), r.files.begin(), r.files.end());

    // Joint-location uncertainty on the surrogate: joint 1 is 0.05 rad off.
    PerturbedDesign perturbed{surrogate, surrogate.psi, surrogate.d};
    perturbed.true_psi[0] += 0.05;
    const auto samples = perturbation_analysis(
        perturbed, polar_grid(std::numbers::pi * surrogate.d.front(), 4, 16));
    CsvTable perturbation{perturbation_header(), {}};
    for (const auto& s : samples)
        perturbation.rows.push_back({s.grid_point.re, s.grid_point.im, s.commanded.kappa,
                                     s.commanded.theta, s.realized.kappa, s.realized.theta,
                                     s.delta_kappa_l, s.delta_theta});
    emit_csv(out_dir / "perturbation_robot_0.csv", perturbation, manifest.outputs);

    // Summary rows and flags.
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json flags = nlohmann::json::object();
    const auto mean = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v)
            s += x;
        return v.empty() ? 0.0 : s / static_cast<double>(v.size());
    };
    std::ostringstream md;
    md << "| robot | transfer | mode | mean RMS [mm] | max |err| [mm] | RMS latent [1/m] |\n"
       << "|---|---|---|---|---|---|\n";
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        for (std::size_t m = 0; m < 3; ++m) {
            const SimMetrics& sm = results[j].metrics[m];
            rows.push_back({{"robot", jobs[j].target->name},
                            {"transfer_mode", transfer_mode_name(jobs[j].transfer)},
                            {"mode", sim_mode_name(kAllSimModes[m])},
                            {"rms_per_joint_m", sm.rms_per_joint},
                            {"rms_mean_m", mean(sm.rms_per_joint)},
                            {"rms_latent", sm.rms_latent},
                            {"max_abs_err_m", sm.max_abs_err},
                            {"horizon_s", results[j].horizon},
                            {"target_dilation", results[j].dilation},
                            {"peak_desired_velocity_mps", results[j].peak_velocity}});
            md << "| " << jobs[j].target->name << " | " << transfer_mode_name(jobs[j].transfer)
               << " | " << sim_mode_name(kAllSimModes[m]) << " | " << std::fixed
               << std::setprecision(4) << mean(sm.rms_per_joint) * 1e3 << " | "
               << sm.max_abs_err * 1e3 << " | " << sm.rms_latent << " |\n";
        }
    }
    for (std::size_t j = 0; j + 1 < jobs.size(); j += 2) {
        // jobs come in (general, symmetric) pairs per target
        const std::string& name = jobs[j].target->name;
        const double diff = (results[j].desired - results[j + 1].desired).cwiseAbs().maxCoeff();
        const double rms_general = mean(results[j].metrics[2].rms_per_joint);
        const double rms_symmetric = mean(results[j + 1].metrics[2].rms_per_joint);
        std::string flag;
        if (diff < 1e-12)
            flag = "symmetric == general";
        else if (rms_symmetric > rms_general)
            flag = "symmetric transfer degraded";
        else
            flag = "symmetric transfer not degraded";
        flags[name] = {{"flag", flag},
                       {"max_desired_stream_difference_m", diff},
                       {"closed_loop_rms_general_m", rms_general},
                       {"closed_loop_rms_symmetric_m", rms_symmetric}};
        md << "\n- " << name << ": " << flag;
    }
    md << '\n';

    const nlohmann::json summary = {{"seed", seed},
                                    {"surrogate", surrogate.name},
                                    {"transient_cutoff_s", config.sim.transient_cutoff},
                                    {"runs", rows},
                                    {"flags", flags}};
    emit_json(out_dir / "summary.json", summary, manifest.outputs);
    write_text_atomic(out_dir / "summary.md", md.str());
    manifest.outputs.push_back(out_dir / "summary.md");
    manifest.write(out_dir / "manifest.json", out_dir);
    return summary;
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized Clarke transform toolkit for displacement-actuated continuum robots",
                 "clarke"};
    app.require_subcommand(1);

    std::string design_spec;
    auto* check = app.add_subcommand("design-check", "Validate a design and print its parameters");
    check->add_option("design", design_spec, "Builtin name (robot_0 .. robot_D) or JSON file")
        ->required();

    std::vector<double> clarke_in;
    std::vector<double> joints_in;
    bool arc = false;
    auto* transform = app.add_subcommand("transform", "Map Clarke coordinates <-> joint values");
    transform->add_option("design", design_spec)->required();
    auto* clarke_opt =
        transform->add_option("--clarke", clarke_in, "rho_Re rho_Im in meters")->expected(2);
    auto* joints_opt =
        transform->add_option("--joints", joints_in, "Joint displacements in meters")
            ->expected(1, -1);
    clarke_opt->excludes(joints_opt);
    transform->add_flag("--arc", arc, "Also print curvature and bending-plane angle");

    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::string out_path;
    auto* sample = app.add_subcommand("sample", "Sample feasible joint values");
    sample->add_option("design", design_spec)->required();
    sample->add_option("--count", count)->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed);
    sample->add_option("--out", out_path)->required();

    TrajOptions traj_opt;
    auto* traj = app.add_subcommand("traj", "Plan a blended C4-smooth trajectory");
    traj->add_option("design", traj_opt.design)->required();
    auto* via_opt = traj->add_option("--via-file", traj_opt.via_file,
                                     "CSV with one via point per row (meters)");
    auto* sample_opt =
        traj->add_option("--sample", traj_opt.sample_segments, "Sample m + 1 via points");
    via_opt->excludes(sample_opt);
    traj->add_option("--seed", traj_opt.seed);
    traj->add_option("--vmax", traj_opt.limits.v_max, "m/s");
    traj->add_option("--amax", traj_opt.limits.a_max, "m/s^2");
    traj->add_option("--dmax", traj_opt.limits.dec_max, "m/s^2");
    traj->add_option("--overlap", traj_opt.overlap, "Blend overlap fraction in [0, 1]");
    traj->add_option("--rate", traj_opt.rate_hz, "Output sample rate, Hz");
    traj->add_option("--out", traj_opt.out)->required();

    SimulateOptions sim_opt;
    auto* simulate = app.add_subcommand("simulate", "Retarget a sampled trajectory and simulate");
    simulate->add_option("surrogate", sim_opt.surrogate)->required();
    simulate->add_option("target", sim_opt.target)->required();
    simulate->add_option("--mode", sim_opt.mode,
                         "all | open_loop_clean | open_loop_noisy | closed_loop");
    simulate->add_option("--transfer", sim_opt.transfer, "general | symmetric");
    simulate->add_option("--seed", sim_opt.seed);
    simulate->add_option("--out-dir", sim_opt.out_dir);

    std::string demo_dir;
    std::uint64_t demo_seed = 42;
    auto* demo = app.add_subcommand("demo", "Five-robot evaluation with all modes");
    demo->alias("demo-paper");
    demo->add_option("--out-dir", demo_dir);
    demo->add_option("--seed", demo_seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseOrValidation;
    }

    try {
        if (*check)
            return cmd_design_check(design_spec, out);
        if (*transform)
            return cmd_transform(design_spec, clarke_in, joints_in, arc, out);
        if (*sample)
            return cmd_sample(design_spec, count, seed, out_path, args, out);
        if (*traj)
            return cmd_traj(traj_opt, args, out);
        if (*simulate)
            return cmd_simulate(sim_opt, args, out);
        if (*demo) {
            const fs::path dir = demo_dir.empty() ? default_output_dir() : fs::path(demo_dir);
            const auto summary = run_demo(dir, demo_seed, args);
            for (const auto& [name, flag] : summary.at("flags").items())
                out << name << ": " << flag.at("flag").get<std::string>() << '\n';
            out << "wrote " << dir.string() << '\n';
            return kOk;
        }
    } catch (const DegenerateDesign& e) {
        err << "degenerate design: " << e.what() << '\n';
        return kDegenerate;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseOrValidation;
    } catch (const InvalidParameter& e) {
        err << "invalid parameter: " << e.what() << '\n';
        return kParseOrValidation;
    } catch (const DimensionMismatch& e) {
        err << "dimension mismatch: " << e.what() << '\n';
        return kParseOrValidation;
    } catch (const OutOfRange& e) {
        err << "out of range: " << e.what() << '\n';
        return kParseOrValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kOk;
}

}  // namespace clarke::cli
