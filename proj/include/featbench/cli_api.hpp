#pragma once

#include <vector>

#include "featbench/bench.hpp"
#include "featbench/config.hpp"
#include "featbench/report.hpp"
#include "featbench/synthetic.hpp"

namespace featbench {

/// generate-synthetic subcommand body: renders the pose-grid dataset and
/// returns where everything was written.
SyntheticDataset cmd_generate_synthetic(const SyntheticConfig& config);

/// run subcommand body: loads the manifest, builds the shared evaluation
/// plan, evaluates every selected combination (reusing disk-cached results
/// when enabled, spreading combinations over `workers` threads), and writes
/// report.csv, stats.json, timing.json, and metadata.json into the output
/// directory. Returns the results in matrix order.
std::vector<CombinationResult> cmd_run(const RunConfig& config);

/// report subcommand body: derives scatter.tsv and ranking.tsv from a
/// stats.json dump.
void cmd_report(const ReportOptions& options);

}  // namespace featbench
