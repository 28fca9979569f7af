#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "featbench/cli_api.hpp"
#include "featbench/errors.hpp"

namespace {

/// Applies the command-line overrides for the `run` subcommand on top of the
/// defaults (or the --config file). Only flags the user actually passed — or
/// that an environment variable supplied — replace config-file values.
featbench::RunConfig merge_run_config(const CLI::App& cmd, const featbench::RunConfig& flags,
                                      const std::vector<std::string>& combo_names,
                                      const std::string& accuracy_policy, bool no_cache,
                                      const std::string& config_path) {
    featbench::RunConfig config;
    if (!config_path.empty()) {
        config = featbench::load_config_file(config_path);
    }
    auto passed = [&cmd](const std::string& name) { return cmd.count(name) > 0; };

    if (passed("--manifest")) config.manifest_path = flags.manifest_path;
    if (passed("--out")) config.output_dir = flags.output_dir;
    if (passed("--workers")) config.workers = flags.workers;
    if (passed("--seed")) config.seed = flags.seed;
    if (passed("--max-keypoints")) config.max_keypoints = flags.max_keypoints;
    if (passed("--ratio")) config.match.ratio = flags.match.ratio;
    if (passed("--min-correct")) config.match.min_correct = flags.match.min_correct;
    if (passed("--count-lower")) config.elimination.count_lower = flags.elimination.count_lower;
    if (passed("--count-upper")) config.elimination.count_upper = flags.elimination.count_upper;
    if (passed("--hist-threshold")) {
        config.elimination.histogram_threshold = flags.elimination.histogram_threshold;
    }
    if (passed("--fast-threshold")) config.detector.fast_threshold = flags.detector.fast_threshold;
    if (passed("--fast-arc")) config.detector.fast_arc = flags.detector.fast_arc;
    if (passed("--cache-dir")) config.cache_dir = flags.cache_dir;
    if (passed("--accuracy-policy")) {
        config.accuracy_policy = featbench::parse_accuracy_policy(accuracy_policy);
    }
    if (passed("--combinations")) {
        config.combinations = combo_names;
        if (combo_names.size() == 1 && combo_names.front() == "all") {
            config.combinations.clear();
        }
    }
    if (no_cache) config.use_cache = false;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feature detector/descriptor benchmark over pose-grid datasets"};
    app.require_subcommand(1);

    featbench::SyntheticConfig syn;
    CLI::App* gen = app.add_subcommand("generate-synthetic",
                                       "Render a synthetic pose-grid dataset with known ground truth");
    gen->add_option("--out", syn.output_dir, "Directory for images, manifest.txt, grid_geometry.json")
        ->required();
    gen->add_option("--points", syn.n_points, "Number of capture points (one scene each)");
    gen->add_option("--width", syn.width, "Crop width in pixels");
    gen->add_option("--height", syn.height, "Crop height in pixels");
    gen->add_option("--seed", syn.seed, "Scene texture seed");

    featbench::RunConfig flags;
    std::string config_path;
    std::string accuracy_policy;
    std::vector<std::string> combo_names;
    bool no_cache = false;
    CLI::App* run = app.add_subcommand("run", "Evaluate detector/descriptor combinations");
    run->add_option("--manifest", flags.manifest_path, "Dataset manifest path");
    run->add_option("--config", config_path, "JSON config file; explicit flags override it")
        ->check(CLI::ExistingFile);
    run->add_option("--out", flags.output_dir, "Report output directory")
        ->envname("FEATBENCH_OUTPUT_DIR");
    run->add_option("--combinations", combo_names,
                    "Combination names such as FAST-SURF, or 'all' for the full matrix");
    run->add_option("--workers", flags.workers, "Threads across combinations")
        ->envname("FEATBENCH_WORKERS");
    run->add_option("--seed", flags.seed, "Binary sampling-pattern seed");
    run->add_option("--max-keypoints", flags.max_keypoints,
                    "Strongest keypoints kept per image (0 = unlimited)");
    run->add_option("--ratio", flags.match.ratio, "Nearest/second-nearest distance ratio cutoff");
    run->add_option("--min-correct", flags.match.min_correct,
                    "Correct matches required to accept an image pair");
    run->add_option("--count-lower", flags.elimination.count_lower,
                    "Keypoint-count filter lower bound");
    run->add_option("--count-upper", flags.elimination.count_upper,
                    "Keypoint-count filter upper bound");
    run->add_option("--hist-threshold", flags.elimination.histogram_threshold,
                    "Histogram-correlation cutoff for template candidates");
    run->add_option("--fast-threshold", flags.detector.fast_threshold,
                    "FAST intensity threshold");
    run->add_option("--fast-arc", flags.detector.fast_arc, "FAST contiguous-arc length");
    run->add_option("--accuracy-policy", accuracy_policy,
                    "Ground-truth case construction: own_template or all_pairs");
    run->add_option("--cache-dir", flags.cache_dir,
                    "Combination result cache directory (default <out>/cache)");
    run->add_flag("--no-cache", no_cache, "Disable the combination result cache");

    featbench::ReportOptions report;
    std::string joined_axes;
    CLI::App* rep = app.add_subcommand("report", "Derive plot data from a stats.json dump");
    rep->add_option("--stats", report.stats_path, "stats.json written by 'run'")->required();
    rep->add_option("--out", report.output_dir, "Directory for scatter.tsv and ranking.tsv")
        ->envname("FEATBENCH_OUTPUT_DIR")
        ->required();
    rep->add_option("--axes", report.axes,
                    "Ranking axes (subset of n_correct mean_angle_diff min_distance)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            const featbench::SyntheticDataset dataset = featbench::cmd_generate_synthetic(syn);
            std::printf("wrote %zu templates, %zu queries\n", dataset.manifest.templates.size(),
                        dataset.manifest.queries.size());
            std::printf("manifest: %s\n", dataset.manifest_path.c_str());
            std::printf("geometry: %s\n", dataset.geometry_path.c_str());
        } else if (run->parsed()) {
            const featbench::RunConfig config =
                merge_run_config(*run, flags, combo_names, accuracy_policy, no_cache, config_path);
            const std::vector<featbench::CombinationResult> results = featbench::cmd_run(config);
            for (const featbench::CombinationResult& r : results) {
                std::printf("%-12s acc %6.2f%%  %10.3f s  %12.3f matches/s%s\n",
                            combination_name(r.combination).c_str(), r.accuracy_pct,
                            r.total_time_sec, r.correct_matches_per_sec,
                            r.from_cache ? "  (cached)" : "");
            }
            std::printf("reports: %s\n", config.output_dir.c_str());
        } else if (rep->parsed()) {
            featbench::cmd_report(report);
            std::printf("plot data: %s\n", report.output_dir.c_str());
        }
    } catch (const featbench::ConfigError& e) {
        std::fprintf(stderr, "featbench: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "featbench: %s\n", e.what());
        return 2;
    }
    return 0;
}
