#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "clarke/csv.hpp"
#include "clarke/experiment.hpp"

namespace clarke::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kParseOrValidation = 2,
    kDegenerate = 3,
    kRuntime = 4,
};

/// Runs the command line (args[0] is the program name) and returns the exit
/// code. Errors are reported on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default output directory: $CLARKE_OUT_DIR, else "out".
std::filesystem::path default_output_dir();

// File schemas, shared with the tests.
std::vector<std::string> sample_header(std::size_t n);
std::vector<std::string> trajectory_header(std::size_t n);
std::vector<std::string> simrun_header(std::size_t n);
std::vector<std::string> perturbation_header();

CsvTable sample_table(const JointSamples& samples);
CsvTable trajectory_table(const std::vector<double>& time, const Eigen::MatrixXd& position,
                          const Eigen::MatrixXd& velocity, const Eigen::MatrixXd& acceleration);
CsvTable simrun_table(const SimRun& run);
nlohmann::json metrics_json(const SimRun& run);

/// Throws ParseError when a metrics document lacks a required key.
void validate_metrics_json(const nlohmann::json& j);

/// Full five-robot evaluation into out_dir. Returns the summary document.
nlohmann::json run_demo(const std::filesystem::path& out_dir, std::uint64_t seed,
                        const std::vector<std::string>& command_line = {});

}  // namespace clarke::cli
