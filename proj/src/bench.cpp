#include "featbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "featbench/describe.hpp"
#include "featbench/detect.hpp"
#include "featbench/errors.hpp"
#include "featbench/hashing.hpp"
#include "featbench/image_io.hpp"

namespace featbench {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;
using nlohmann::ordered_json;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t image_content_hash(const Image& img) {
    const std::int32_t dims[2] = {img.width(), img.height()};
    std::uint64_t h = fnv1a64(dims, sizeof(dims));
    return fnv1a64(img.pixels().data(), img.pixels().size(), h);
}

KeypointList detect_with(DetectorKind detector, const Image& img, const DetectorParams& params) {
    switch (detector) {
        case DetectorKind::Orb: return orb_detect(img, params);
        case DetectorKind::Surf: return surf_detect(img, params);
        case DetectorKind::Sift: return sift_detect(img, params);
        case DetectorKind::Fast:
            return fast_detect(img, params.fast_threshold, params.fast_arc, true);
        case DetectorKind::Brisk: return brisk_detect(img, params);
    }
    throw std::logic_error("detect_with: bad detector kind");
}

DescribeResult describe_with(DescriptorKind descriptor, const Image& img, const KeypointList& kps,
                             std::uint32_t pattern_seed) {
    switch (descriptor) {
        case DescriptorKind::Brief: return brief_describe(img, kps, brief_pattern(pattern_seed));
        case DescriptorKind::Orb: return orb_describe(img, kps, brief_pattern(pattern_seed));
        case DescriptorKind::Brisk: return brisk_describe(img, kps);
        case DescriptorKind::Sift: return sift_describe(img, kps);
        case DescriptorKind::Surf: return surf_describe(img, kps);
    }
    throw std::logic_error("describe_with: bad descriptor kind");
}

/// Keeps the `cap` strongest keypoints (ties to the earlier index) without
/// disturbing the detector's output order. cap 0 = unlimited.
KeypointList cap_keypoints(KeypointList kps, std::size_t cap) {
    if (cap == 0 || kps.size() <= cap) {
        return kps;
    }
    std::vector<std::size_t> order(kps.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (kps[a].response != kps[b].response) {
            return kps[a].response > kps[b].response;
        }
        return a < b;
    });
    order.resize(cap);
    std::sort(order.begin(), order.end());
    KeypointList capped;
    capped.reserve(cap);
    for (std::size_t i : order) {
        capped.push_back(kps[i]);
    }
    return capped;
}

std::uint64_t chain_pose(const PoseLabel& pose, std::uint64_t h) {
    const std::int32_t fields[3] = {pose.point_id, pose.height_level, pose.yaw};
    return fnv1a64(fields, sizeof(fields), h);
}

ordered_json result_to_json(const CombinationResult& result) {
    ordered_json j;
    j["format"] = 1;
    j["combination"] = combination_name(result.combination);
    j["total_time_sec"] = result.total_time_sec;
    j["accuracy_pct"] = result.accuracy_pct;
    j["ground_truth_cases"] = result.ground_truth_cases;
    j["correct_matches_per_sec"] = result.correct_matches_per_sec;
    j["total_correct_matches"] = result.total_correct_matches;
    j["counts"] = {{"tp", result.counts.tp},
                   {"tn", result.counts.tn},
                   {"fp", result.counts.fp},
                   {"fn", result.counts.fn}};
    ordered_json pairs = ordered_json::array();
    for (const PairRecord& rec : result.pairs) {
        ordered_json entry = ordered_json::array(
            {rec.query_idx, rec.template_idx, rec.stats.n_correct, rec.stats.mean_angle_diff,
             nullptr, rec.matched, rec.seconds});
        if (rec.stats.min_distance != std::numeric_limits<double>::max()) {
            entry[4] = rec.stats.min_distance;
        }
        pairs.push_back(std::move(entry));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

CombinationResult result_from_json(const json& j) {
    CombinationResult result;
    result.combination = parse_combination(j.at("combination").get<std::string>());
    result.total_time_sec = j.at("total_time_sec").get<double>();
    result.accuracy_pct = j.at("accuracy_pct").get<double>();
    result.ground_truth_cases = j.at("ground_truth_cases").get<std::int64_t>();
    result.correct_matches_per_sec = j.at("correct_matches_per_sec").get<double>();
    result.total_correct_matches = j.at("total_correct_matches").get<std::int64_t>();
    const json& counts = j.at("counts");
    result.counts.tp = counts.at("tp").get<std::int64_t>();
    result.counts.tn = counts.at("tn").get<std::int64_t>();
    result.counts.fp = counts.at("fp").get<std::int64_t>();
    result.counts.fn = counts.at("fn").get<std::int64_t>();
    for (const json& entry : j.at("pairs")) {
        PairRecord rec;
        rec.query_idx = entry.at(0).get<std::size_t>();
        rec.template_idx = entry.at(1).get<std::size_t>();
        rec.stats.n_correct = entry.at(2).get<std::size_t>();
        rec.stats.mean_angle_diff = entry.at(3).get<double>();
        rec.stats.min_distance = entry.at(4).is_null() ? std::numeric_limits<double>::max()
                                                       : entry.at(4).get<double>();
        rec.matched = entry.at(5).get<bool>();
        rec.seconds = entry.at(6).get<double>();
        result.pairs.push_back(std::move(rec));
    }
    return result;
}

}  // namespace

bool positive_case(const PoseLabel& query, const PoseLabel& tmpl) {
    return query.point_id == tmpl.point_id && std::abs(query.yaw - tmpl.yaw) <= 30;
}

std::pair<AccuracyCounts, double> compute_accuracy(const std::vector<CaseDecision>& decisions,
                                                   const DatasetManifest& manifest) {
    AccuracyCounts counts;
    for (const CaseDecision& d : decisions) {
        if (d.query_idx >= manifest.queries.size()) {
            throw std::out_of_range("compute_accuracy: query index " +
                                    std::to_string(d.query_idx) + " outside manifest");
        }
        if (d.template_idx >= manifest.templates.size()) {
            throw std::out_of_range("compute_accuracy: template index " +
                                    std::to_string(d.template_idx) + " outside manifest");
        }
        const bool positive = positive_case(manifest.queries[d.query_idx].pose,
                                            manifest.templates[d.template_idx].pose);
        if (positive) {
            d.matched ? ++counts.tp : ++counts.fn;
        } else {
            d.matched ? ++counts.fp : ++counts.tn;
        }
    }
    const double pct =
        decisions.empty() ? 100.0 : 100.0 * double(counts.tp + counts.tn) / double(counts.total());
    return {counts, pct};
}

double matches_per_second(std::int64_t total_matches, double total_time) {
    if (!(total_time > 0.0)) {
        throw std::invalid_argument("matches_per_second: total_time must be positive");
    }
    return double(total_matches) / total_time;
}

EvalPlan build_eval_plan(const DatasetManifest& manifest, const RunConfig& config) {
    EvalPlan plan;
    plan.manifest = manifest;

    auto t0 = Clock::now();
    plan.template_images.reserve(manifest.templates.size());
    for (const TemplateEntry& t : manifest.templates) {
        plan.template_images.push_back(load_image(t.path));
    }
    plan.query_images.reserve(manifest.queries.size());
    for (const QueryEntry& q : manifest.queries) {
        plan.query_images.push_back(load_image(q.path));
    }
    plan.load_time_sec = seconds_since(t0);

    t0 = Clock::now();
    for (const Image& img : plan.template_images) {
        plan.template_hashes.push_back(image_content_hash(img));
    }
    for (const Image& img : plan.query_images) {
        plan.query_hashes.push_back(image_content_hash(img));
    }

    plan.count_filter = keypoint_count_filter(plan.query_images, config.elimination.count_lower,
                                              config.elimination.count_upper, config.detector);

    std::vector<Histogram> template_hists;
    template_hists.reserve(plan.template_images.size());
    for (const Image& img : plan.template_images) {
        template_hists.push_back(intensity_histogram(img));
    }
    plan.candidates.assign(plan.query_images.size(), {});
    for (std::size_t qi : plan.count_filter.kept) {
        plan.candidates[qi] = histogram_prefilter(intensity_histogram(plan.query_images[qi]),
                                                  template_hists,
                                                  config.elimination.histogram_threshold);
    }
    plan.plan_time_sec = seconds_since(t0);

    std::uint64_t digest = kFnvBasis;
    const std::uint64_t sizes[2] = {plan.template_images.size(), plan.query_images.size()};
    digest = fnv1a64(sizes, sizeof(sizes), digest);
    for (std::size_t i = 0; i < manifest.templates.size(); ++i) {
        digest = fnv1a64(&plan.template_hashes[i], sizeof(std::uint64_t), digest);
        digest = chain_pose(manifest.templates[i].pose, digest);
    }
    for (std::size_t i = 0; i < manifest.queries.size(); ++i) {
        digest = fnv1a64(&plan.query_hashes[i], sizeof(std::uint64_t), digest);
        digest = chain_pose(manifest.queries[i].pose, digest);
    }
    digest = fnv1a64(plan.count_filter.kept.data(),
                     plan.count_filter.kept.size() * sizeof(std::size_t), digest);
    for (const std::vector<std::size_t>& c : plan.candidates) {
        const std::uint64_t n = c.size();
        digest = fnv1a64(&n, sizeof(n), digest);
        digest = fnv1a64(c.data(), c.size() * sizeof(std::size_t), digest);
    }
    plan.dataset_digest = digest;
    return plan;
}

struct DetectorMemo::Slot {
    std::once_flag once;
    Entry entry;
};

DetectorMemo::DetectorMemo() = default;
DetectorMemo::~DetectorMemo() = default;

const DetectorMemo::Entry& DetectorMemo::get_or_compute(DetectorKind detector,
                                                        std::uint64_t image_hash,
                                                        const std::function<Entry()>& compute) {
    Slot* slot = nullptr;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        std::unique_ptr<Slot>& stored = slots_[{static_cast<int>(detector), image_hash}];
        if (!stored) {
            stored = std::make_unique<Slot>();
        }
        slot = stored.get();
    }
    std::call_once(slot->once, [&] { slot->entry = compute(); });
    return slot->entry;
}

CombinationResult run_combination(const CombinationId& combo, const EvalPlan& plan,
                                  const RunConfig& config, DetectorMemo* memo) {
    const auto run_start = Clock::now();
    CombinationResult result;
    result.combination = combo;

    struct PairIdx {
        std::size_t q, t;
    };
    std::vector<PairIdx> pair_list;
    for (std::size_t qi : plan.count_filter.kept) {
        for (std::size_t ti : plan.candidates[qi]) {
            pair_list.push_back({qi, ti});
        }
    }

    // Lazy per-image extraction: only images that appear in at least one
    // evaluated pair are detected and described, so the per-pair shares of
    // image cost sum back to the combination total exactly.
    struct Extraction {
        bool done = false;
        KeypointList kept;
        std::vector<Descriptor> descs;
        double seconds = 0.0;
        std::size_t uses = 0;
    };
    std::vector<Extraction> query_ext(plan.query_images.size());
    std::vector<Extraction> template_ext(plan.template_images.size());
    for (const PairIdx& p : pair_list) {
        ++query_ext[p.q].uses;
        ++template_ext[p.t].uses;
    }

    DetectorMemo local_memo;
    DetectorMemo* detect_memo = memo ? memo : &local_memo;

    auto extract = [&](Extraction& e, const Image& img, std::uint64_t hash,
                       const std::string& path) {
        if (e.done) {
            return;
        }
        try {
            const DetectorMemo::Entry& det =
                detect_memo->get_or_compute(combo.detector, hash, [&] {
                    const auto t0 = Clock::now();
                    KeypointList kps = detect_with(combo.detector, img, config.detector);
                    kps = cap_keypoints(std::move(kps), config.max_keypoints);
                    return DetectorMemo::Entry{std::move(kps), seconds_since(t0)};
                });
            const auto t0 = Clock::now();
            DescribeResult described = describe_with(combo.descriptor, img, det.keypoints,
                                                     config.seed);
            e.seconds = det.seconds + seconds_since(t0);
            e.kept = std::move(described.kept);
            e.descs = std::move(described.descriptors);
            e.done = true;
        } catch (const std::exception& ex) {
            throw std::runtime_error(combination_name(combo) + ": " + path + ": " + ex.what());
        }
    };

    result.pairs.reserve(pair_list.size());
    for (const PairIdx& p : pair_list) {
        extract(query_ext[p.q], plan.query_images[p.q], plan.query_hashes[p.q],
                plan.manifest.queries[p.q].path);
        extract(template_ext[p.t], plan.template_images[p.t], plan.template_hashes[p.t],
                plan.manifest.templates[p.t].path);
        const Extraction& qe = query_ext[p.q];
        const Extraction& te = template_ext[p.t];

        const auto t0 = Clock::now();
        PairRecord rec;
        rec.query_idx = p.q;
        rec.template_idx = p.t;
        if (!qe.descs.empty() && !te.descs.empty()) {
            const std::vector<Match> matches =
                brute_force_match(qe.descs, te.descs, config.match.cross_check);
            const std::vector<Match> surviving = filter_matches(
                matches, config.match.ratio, config.match.max_distance_for(qe.descs.front()));
            rec.stats = match_stats(surviving, qe.kept, te.kept);
        } else {
            rec.stats = match_stats({}, {}, {});  // the empty-pair sentinel stats
        }
        rec.matched = image_pair_decision(rec.stats, config.match.min_correct);
        rec.seconds = seconds_since(t0);
        result.total_correct_matches += std::int64_t(rec.stats.n_correct);
        result.pairs.push_back(std::move(rec));
    }

    double stage_total = 0.0;
    for (const Extraction& e : query_ext) {
        if (e.done) stage_total += e.seconds;
    }
    for (const Extraction& e : template_ext) {
        if (e.done) stage_total += e.seconds;
    }
    for (const PairRecord& rec : result.pairs) {
        stage_total += rec.seconds;
    }
    for (PairRecord& rec : result.pairs) {
        rec.seconds += query_ext[rec.query_idx].seconds / double(query_ext[rec.query_idx].uses) +
                       template_ext[rec.template_idx].seconds /
                           double(template_ext[rec.template_idx].uses);
    }
    // An all-eliminated manifest measures nothing; fall back to the loop's
    // wall time so the reported total stays positive.
    result.total_time_sec = stage_total > 0.0 ? stage_total : seconds_since(run_start);

    std::map<std::pair<std::size_t, std::size_t>, bool> outcome;
    for (const PairRecord& rec : result.pairs) {
        outcome[{rec.query_idx, rec.template_idx}] = rec.matched;
    }
    auto decided = [&](std::size_t qi, std::size_t ti) {
        const auto it = outcome.find({qi, ti});
        return it != outcome.end() && it->second;
    };

    std::vector<CaseDecision> decisions;
    if (config.accuracy_policy == AccuracyPolicy::own_template) {
        for (std::size_t qi = 0; qi < plan.manifest.queries.size(); ++qi) {
            std::size_t own = std::size_t(-1);
            for (std::size_t ti = 0; ti < plan.manifest.templates.size(); ++ti) {
                if (plan.manifest.templates[ti].pose.point_id ==
                    plan.manifest.queries[qi].pose.point_id) {
                    own = ti;
                    break;
                }
            }
            if (own == std::size_t(-1)) {
                throw ConfigError("own_template accuracy policy: no template shares capture point " +
                                  std::to_string(plan.manifest.queries[qi].pose.point_id));
            }
            decisions.push_back({qi, own, decided(qi, own)});
        }
    } else {
        for (std::size_t qi = 0; qi < plan.manifest.queries.size(); ++qi) {
            for (std::size_t ti = 0; ti < plan.manifest.templates.size(); ++ti) {
                decisions.push_back({qi, ti, decided(qi, ti)});
            }
        }
    }

    const auto [counts, pct] = compute_accuracy(decisions, plan.manifest);
    result.counts = counts;
    result.accuracy_pct = pct;
    result.ground_truth_cases = std::int64_t(decisions.size());
    result.correct_matches_per_sec =
        matches_per_second(result.total_correct_matches, result.total_time_sec);
    return result;
}

std::string cache_file_path(const std::string& cache_dir, const CombinationId& combo,
                            std::uint64_t config_digest, std::uint64_t dataset_digest) {
    return (std::filesystem::path(cache_dir) /
            (combination_name(combo) + "-" + hash_hex(config_digest) + "-" +
             hash_hex(dataset_digest) + ".json"))
        .string();
}

bool load_cached_result(const std::string& path, const CombinationId& combo,
                        std::uint64_t config_digest, std::uint64_t dataset_digest,
                        CombinationResult& out) {
    std::ifstream in(path);
    if (!in) {
        return false;
    }
    try {
        const json j = json::parse(in);
        if (j.at("format").get<int>() != 1 ||
            j.at("config_hash").get<std::string>() != hash_hex(config_digest) ||
            j.at("dataset_digest").get<std::string>() != hash_hex(dataset_digest) ||
            j.at("combination").get<std::string>() != combination_name(combo)) {
            return false;
        }
        out = result_from_json(j);
        out.from_cache = true;
        return true;
    } catch (const std::exception&) {
        return false;  // stale or damaged cache entries are recomputed
    }
}

void store_cached_result(const std::string& path, const CombinationResult& result,
                         std::uint64_t config_digest, std::uint64_t dataset_digest) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) {
        std::filesystem::create_directories(target.parent_path());
    }
    ordered_json j = result_to_json(result);
    j["config_hash"] = hash_hex(config_digest);
    j["dataset_digest"] = hash_hex(dataset_digest);
    std::ofstream outf(path);
    if (!outf) {
        throw IoError("cannot write cache file: " + path);
    }
    outf << j.dump() << "\n";
    if (!outf) {
        throw IoError("failed writing cache file: " + path);
    }
}

}  // namespace featbench
