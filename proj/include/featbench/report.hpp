#pragma once

#include <string>
#include <vector>

#include "featbench/bench.hpp"
#include "featbench/config.hpp"

namespace featbench {

/// One table row: detector,descriptor,total_time_sec,accuracy_pct,
/// ground_truth_cases,correct_matches_per_sec with fixed decimal widths
/// (3, 2, and 3 places).
std::string report_csv_row(const CombinationResult& result);

/// Writes the run outputs into output_dir:
///  - report.csv      one row per combination, stable header and columns
///  - stats.json      the full per-pair dump every re-analysis works from
///                    (no timing fields; reruns with one worker match byte
///                    for byte)
///  - timing.json     wall-clock numbers, the volatile part
///  - metadata.json   the resolved config and its hash
void write_run_reports(const std::string& output_dir, const RunConfig& config,
                       const EvalPlan& plan, const std::vector<CombinationResult>& results);

struct ReportOptions {
    std::string stats_path;
    std::string output_dir;
    /// Metric axes for the ranking distance; empty = all three
    /// (n_correct, mean_angle_diff, min_distance).
    std::vector<std::string> axes;
};

/// Derives plot data from a stats.json dump:
///  - scatter.tsv  per query-yaw case, one row per combination with its mean
///                 correct-match count, mean angle difference, and mean
///                 minimum distance over the same-point pairs
///  - ranking.tsv  combinations ordered by Euclidean distance, in min-max
///                 normalized metric space, to the best combination (the one
///                 with the most correct matches)
/// Throws IoError when the dump is missing or lacks required fields and
/// ConfigError for unknown axis names.
void write_plot_data(const ReportOptions& options);

}  // namespace featbench
