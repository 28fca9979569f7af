#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "featbench/combinations.hpp"
#include "featbench/config.hpp"
#include "featbench/elimination.hpp"
#include "featbench/histogram.hpp"
#include "featbench/image.hpp"
#include "featbench/keypoint.hpp"
#include "featbench/manifest.hpp"
#include "featbench/match.hpp"

namespace featbench {

/// Decision tallies over the ground-truth cases.
struct AccuracyCounts {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + tn + fp + fn; }
    bool operator==(const AccuracyCounts&) const = default;
};

/// The pipeline's matched/unmatched outcome for one ground-truth case.
struct CaseDecision {
    std::size_t query_idx = 0;
    std::size_t template_idx = 0;
    bool matched = false;
};

/// Whether (query pose, template pose) is a positive case: same capture
/// point with at most 30 degrees of yaw difference, at any height level.
bool positive_case(const PoseLabel& query, const PoseLabel& tmpl);

/// Scores the decisions against the pose-tolerant ground truth. Returns the
/// counts and (tp+tn)/total*100 (100.0 when there are no cases). Throws
/// std::out_of_range when a decision indexes outside the manifest.
std::pair<AccuracyCounts, double> compute_accuracy(const std::vector<CaseDecision>& decisions,
                                                   const DatasetManifest& manifest);

/// Surviving matches per second of pipeline time. Throws
/// std::invalid_argument when total_time is not positive.
double matches_per_second(std::int64_t total_matches, double total_time);

/// Per-(query, template) outcome kept for the stats dump. `seconds` is this
/// pair's attributed share of the combination time: its own match-stage cost
/// plus equal splits of each endpoint image's detect+describe cost.
struct PairRecord {
    std::size_t query_idx = 0;
    std::size_t template_idx = 0;
    MatchStats stats;
    bool matched = false;
    double seconds = 0.0;
};

/// One evaluation-matrix row with its report metrics and full per-pair dump.
struct CombinationResult {
    CombinationId combination;
    double total_time_sec = 0.0;
    double accuracy_pct = 0.0;
    std::int64_t ground_truth_cases = 0;
    double correct_matches_per_sec = 0.0;
    std::int64_t total_correct_matches = 0;
    AccuracyCounts counts;
    std::vector<PairRecord> pairs;
    bool from_cache = false;
};

/// Work shared by every combination: decoded images and their content
/// hashes, the FAST-count elimination, per-image histograms, and each kept
/// query's candidate template list (ascending template indices; empty for
/// eliminated queries). load_time_sec covers image decode, plan_time_sec the
/// elimination and histogram stages — both reported separately from
/// combination time.
struct EvalPlan {
    DatasetManifest manifest;
    std::vector<Image> template_images;
    std::vector<Image> query_images;
    std::vector<std::uint64_t> template_hashes;
    std::vector<std::uint64_t> query_hashes;
    CountFilterResult count_filter;
    std::vector<std::vector<std::size_t>> candidates;
    double load_time_sec = 0.0;
    double plan_time_sec = 0.0;
    /// Chains every image hash plus the elimination structure; cache entries
    /// bind to it so a changed dataset never replays stale results.
    std::uint64_t dataset_digest = 0;
};

/// Loads the manifest's images and runs the two elimination stages.
EvalPlan build_eval_plan(const DatasetManifest& manifest, const RunConfig& config);

/// Detector outputs shared across combinations, keyed by (detector, image
/// content hash). The first caller computes; later callers replay the stored
/// keypoints and the measured seconds, so every combination charges itself
/// the cost the detection actually took once. Thread-safe.
class DetectorMemo {
  public:
    struct Entry {
        KeypointList keypoints;
        double seconds = 0.0;
    };

    DetectorMemo();
    ~DetectorMemo();
    DetectorMemo(const DetectorMemo&) = delete;
    DetectorMemo& operator=(const DetectorMemo&) = delete;

    const Entry& get_or_compute(DetectorKind detector, std::uint64_t image_hash,
                                const std::function<Entry()>& compute);

  private:
    struct Slot;
    std::mutex mutex_;
    std::map<std::pair<int, std::uint64_t>, std::unique_ptr<Slot>> slots_;
};

/// Runs one combination over the plan: detect + describe each used image,
/// match every (kept query, candidate template) pair, filter, aggregate
/// stats, decide, and score accuracy under the configured policy.
/// total_time_sec sums the measured detection, description, and matching
/// stage costs (image decode excluded); per-pair attributed seconds sum to
/// it exactly. Passing a memo shares detection across combinations.
CombinationResult run_combination(const CombinationId& combo, const EvalPlan& plan,
                                  const RunConfig& config, DetectorMemo* memo = nullptr);

/// Cache location for one combination's result under this config + dataset.
std::string cache_file_path(const std::string& cache_dir, const CombinationId& combo,
                            std::uint64_t config_digest, std::uint64_t dataset_digest);

/// Reloads a cached result. Returns false (leaving `out` untouched) when the
/// file is missing, unreadable, or was produced by a different config or
/// dataset. A reloaded result carries from_cache = true.
bool load_cached_result(const std::string& path, const CombinationId& combo,
                        std::uint64_t config_digest, std::uint64_t dataset_digest,
                        CombinationResult& out);

/// Writes the result where load_cached_result finds it.
void store_cached_result(const std::string& path, const CombinationResult& result,
                         std::uint64_t config_digest, std::uint64_t dataset_digest);

}  // namespace featbench
