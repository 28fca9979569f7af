#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "featbench/combinations.hpp"
#include "featbench/descriptor.hpp"
#include "featbench/detect.hpp"

namespace featbench {

/// Matching-stage thresholds. The absolute distance cutoff depends on the
/// descriptor family: bit budgets for the two binary lengths and an L2 cutoff
/// for unit-normalized real vectors.
struct MatchParams {
    double ratio = 0.8;
    double max_distance_binary256 = 64.0;
    double max_distance_binary512 = 128.0;
    double max_distance_real = 0.7;
    bool cross_check = true;
    std::size_t min_correct = 8;

    double max_distance_for(const Descriptor& d) const;
    void validate() const;
};

/// Query-elimination thresholds: the FAST keypoint-count hysteresis band and
/// the histogram-correlation cutoff for template candidates.
struct EliminationParams {
    std::size_t count_lower = 40;
    std::size_t count_upper = 4000;
    double histogram_threshold = 0.9;

    void validate() const;
};

/// How ground-truth cases are built from the manifest:
///  - own_template: one case per query, decided against the template that
///    shares the query's capture point (the pose-grid reading of the
///    accuracy formula);
///  - all_pairs: one case per (query, template) pair.
enum class AccuracyPolicy { own_template, all_pairs };

const char* accuracy_policy_name(AccuracyPolicy policy);
AccuracyPolicy parse_accuracy_policy(const std::string& name);

/// Everything a benchmark run depends on. Loaded from JSON (all keys
/// optional, unknown keys rejected) and merged with command-line overrides;
/// the resolved form is written into every output for reproducibility.
struct RunConfig {
    std::string manifest_path;
    std::vector<std::string> combinations;  ///< empty = the full matrix
    DetectorParams detector;
    MatchParams match;
    EliminationParams elimination;
    std::size_t max_keypoints = 500;  ///< per image, 0 = unlimited
    std::uint32_t seed = 7;           ///< BRIEF/ORB pattern seed
    AccuracyPolicy accuracy_policy = AccuracyPolicy::own_template;
    int workers = 1;
    std::string output_dir = "featbench-out";
    bool use_cache = true;
    std::string cache_dir;  ///< empty = <output_dir>/cache

    /// Throws ConfigError on out-of-range values or unknown combination names.
    void validate() const;

    /// The combinations this run evaluates, in matrix order.
    std::vector<CombinationId> selected_combinations() const;
};

/// Strict JSON decode: unknown keys raise ConfigError naming the key.
RunConfig config_from_json(const nlohmann::json& j);

/// Full resolved config, fixed key order.
nlohmann::ordered_json config_to_json(const RunConfig& config);

/// Hash over the result-affecting fields only (combinations, detector,
/// match, elimination, max_keypoints, seed, accuracy policy) — not over
/// paths, worker count, or cache switches. Runs with equal hashes and equal
/// datasets are comparable row for row.
std::uint64_t config_hash(const RunConfig& config);

/// Parses a JSON config file. Throws IoError when unreadable, ConfigError on
/// malformed JSON or invalid fields.
RunConfig load_config_file(const std::string& path);

}  // namespace featbench
