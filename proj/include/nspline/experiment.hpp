#pragma once

#include <map>
#include <string>
#include <vector>

#include "nspline/dataset.hpp"

namespace nspline {

struct MethodRecord {
    std::string method;
    double max_err = 0.0;        // max |f(x_n) - y_n| over the data
    double path_norm = -1.0;     // < 0 means not applicable (spline methods)
    double seminorm = 0.0;
    double oracle_seminorm = -1.0;  // filled on the oracle row
    double time_s = 0.0;
};

struct ExperimentReport {
    std::vector<MethodRecord> records;
    std::uint64_t dataset_fingerprint = 0;
    std::vector<std::pair<std::string, std::string>> config_echo;
};

/// INI-style experiment configuration: an [experiment] section plus one
/// section per method to run.  Unknown sections or keys are errors.
struct ExperimentConfig {
    // section -> (key -> value), insertion-ordered per section
    std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> sections;

    static ExperimentConfig parse_file(const std::string& path);
    static ExperimentConfig parse_text(const std::string& text, const std::string& origin);
};

/// Runs every configured method on the configured dataset, writes
/// <method>.csv curve samples, report.txt, and optionally plot.svg into
/// out_dir.  Returns the assembled report.
ExperimentReport run_experiment(const std::string& config_path, const std::string& out_dir);
ExperimentReport run_experiment(const ExperimentConfig& config, const std::string& out_dir);

// Fixed-width report table, one method per row.  time_s is wall-clock and
// excluded from determinism comparisons.
std::string format_report(const ExperimentReport& report);

}  // namespace nspline
