#include "featbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

#include "json.hpp"

#include "featbench/errors.hpp"
#include "featbench/hashing.hpp"

namespace featbench {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string basename_of(const std::string& path) {
    return fs::path(path).filename().string();
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write report file: " + path.string());
    }
    return out;
}

void finish_output(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) {
        throw IoError("failed writing report file: " + path.string());
    }
}

std::string format3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

ordered_json pose_json(const PoseLabel& pose) {
    return {{"point", pose.point_id}, {"height", pose.height_level}, {"yaw", pose.yaw}};
}

void write_csv(const fs::path& path, const RunConfig& config,
               const std::vector<CombinationResult>& results) {
    std::ofstream out = open_output(path);
    out << "# config_hash=" << hash_hex(config_hash(config)) << " seed=" << config.seed << "\n";
    out << "detector,descriptor,total_time_sec,accuracy_pct,ground_truth_cases,"
           "correct_matches_per_sec\n";
    for (const CombinationResult& r : results) {
        out << report_csv_row(r) << "\n";
    }
    finish_output(out, path);
}

void write_stats(const fs::path& path, const RunConfig& config, const EvalPlan& plan,
                 const std::vector<CombinationResult>& results) {
    ordered_json j;
    j["format"] = 1;
    j["config_hash"] = hash_hex(config_hash(config));
    j["seed"] = config.seed;
    j["accuracy_policy"] = accuracy_policy_name(config.accuracy_policy);

    std::vector<bool> kept(plan.manifest.queries.size(), false);
    for (std::size_t qi : plan.count_filter.kept) {
        kept[qi] = true;
    }
    ordered_json templates = ordered_json::array();
    for (const TemplateEntry& t : plan.manifest.templates) {
        ordered_json entry = pose_json(t.pose);
        entry["path"] = basename_of(t.path);
        entry["object"] = t.object;
        templates.push_back(std::move(entry));
    }
    ordered_json queries = ordered_json::array();
    for (std::size_t qi = 0; qi < plan.manifest.queries.size(); ++qi) {
        ordered_json entry = pose_json(plan.manifest.queries[qi].pose);
        entry["path"] = basename_of(plan.manifest.queries[qi].path);
        entry["fast_count"] = plan.count_filter.counts[qi];
        entry["kept"] = bool(kept[qi]);
        entry["candidates"] = plan.candidates[qi];
        queries.push_back(std::move(entry));
    }
    j["dataset"] = {{"templates", std::move(templates)}, {"queries", std::move(queries)}};

    ordered_json combos = ordered_json::array();
    for (const CombinationResult& r : results) {
        ordered_json c;
        c["detector"] = detector_name(r.combination.detector);
        c["descriptor"] = descriptor_name(r.combination.descriptor);
        c["accuracy_pct"] = r.accuracy_pct;
        c["ground_truth_cases"] = r.ground_truth_cases;
        c["total_correct_matches"] = r.total_correct_matches;
        c["counts"] = {{"tp", r.counts.tp},
                       {"tn", r.counts.tn},
                       {"fp", r.counts.fp},
                       {"fn", r.counts.fn}};
        ordered_json pairs = ordered_json::array();
        for (const PairRecord& rec : r.pairs) {
            ordered_json p;
            p["query"] = rec.query_idx;
            p["template"] = rec.template_idx;
            p["n_correct"] = rec.stats.n_correct;
            p["mean_angle_diff"] = rec.stats.mean_angle_diff;
            if (rec.stats.min_distance == std::numeric_limits<double>::max()) {
                p["min_distance"] = nullptr;
            } else {
                p["min_distance"] = rec.stats.min_distance;
            }
            p["matched"] = rec.matched;
            pairs.push_back(std::move(p));
        }
        c["pairs"] = std::move(pairs);
        combos.push_back(std::move(c));
    }
    j["combinations"] = std::move(combos);

    std::ofstream out = open_output(path);
    out << j.dump(2) << "\n";
    finish_output(out, path);
}

void write_timing(const fs::path& path, const RunConfig& config, const EvalPlan& plan,
                  const std::vector<CombinationResult>& results) {
    ordered_json j;
    j["format"] = 1;
    j["config_hash"] = hash_hex(config_hash(config));
    j["seed"] = config.seed;
    j["timing_mode"] = config.workers == 1 ? "single-thread" : "multi-thread";
    j["workers"] = config.workers;
    j["load_time_sec"] = plan.load_time_sec;
    j["plan_time_sec"] = plan.plan_time_sec;
    ordered_json combos = ordered_json::array();
    for (const CombinationResult& r : results) {
        combos.push_back({{"detector", detector_name(r.combination.detector)},
                          {"descriptor", descriptor_name(r.combination.descriptor)},
                          {"total_time_sec", r.total_time_sec},
                          {"correct_matches_per_sec", r.correct_matches_per_sec},
                          {"from_cache", r.from_cache}});
    }
    j["combinations"] = std::move(combos);
    std::ofstream out = open_output(path);
    out << j.dump(2) << "\n";
    finish_output(out, path);
}

void write_metadata(const fs::path& path, const RunConfig& config) {
    ordered_json j;
    j["format"] = 1;
    j["tool"] = "featbench";
    j["config_hash"] = hash_hex(config_hash(config));
    j["seed"] = config.seed;
    j["timing_mode"] = config.workers == 1 ? "single-thread" : "multi-thread";
    j["config"] = config_to_json(config);
    std::ofstream out = open_output(path);
    out << j.dump(2) << "\n";
    finish_output(out, path);
}

// ---- plot-data derivation ----

struct DumpPair {
    std::size_t query = 0;
    std::size_t tmpl = 0;
    std::size_t n_correct = 0;
    double mean_angle_diff = 0.0;
    double min_distance = 0.0;
    bool has_distance = false;
};

struct DumpCombination {
    std::string detector;
    std::string descriptor;
    std::vector<DumpPair> pairs;
};

struct StatsDump {
    std::string config_hash;
    std::string seed;
    std::vector<PoseLabel> query_poses;
    std::vector<PoseLabel> template_poses;
    std::vector<DumpCombination> combinations;
};

PoseLabel pose_from_json(const json& j) {
    PoseLabel pose;
    pose.point_id = j.at("point").get<int>();
    pose.height_level = j.at("height").get<int>();
    pose.yaw = j.at("yaw").get<int>();
    return pose;
}

StatsDump load_stats_dump(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open stats dump: " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError("stats dump " + path + ": " + e.what());
    }
    StatsDump dump;
    try {
        dump.config_hash = j.at("config_hash").get<std::string>();
        dump.seed = j.at("seed").dump();
        for (const json& q : j.at("dataset").at("queries")) {
            dump.query_poses.push_back(pose_from_json(q));
        }
        for (const json& t : j.at("dataset").at("templates")) {
            dump.template_poses.push_back(pose_from_json(t));
        }
        for (const json& c : j.at("combinations")) {
            DumpCombination combo;
            combo.detector = c.at("detector").get<std::string>();
            combo.descriptor = c.at("descriptor").get<std::string>();
            for (const json& p : c.at("pairs")) {
                DumpPair pair;
                pair.query = p.at("query").get<std::size_t>();
                pair.tmpl = p.at("template").get<std::size_t>();
                pair.n_correct = p.at("n_correct").get<std::size_t>();
                pair.mean_angle_diff = p.at("mean_angle_diff").get<double>();
                if (!p.at("min_distance").is_null()) {
                    pair.min_distance = p.at("min_distance").get<double>();
                    pair.has_distance = true;
                }
                if (pair.query >= dump.query_poses.size() ||
                    pair.tmpl >= dump.template_poses.size()) {
                    throw IoError("stats dump " + path + ": pair indexes outside the dataset");
                }
                combo.pairs.push_back(pair);
            }
            dump.combinations.push_back(std::move(combo));
        }
    } catch (const json::exception& e) {
        throw IoError("stats dump " + path + ": " + e.what());
    }
    return dump;
}

/// The per-combination point in metric space, aggregated over same-point
/// (ground-truth-relevant) pairs: total correct matches, then means of the
/// angle and minimum-distance statistics over pairs that had matches.
struct MetricPoint {
    std::int64_t n_correct = 0;
    double mean_angle_diff = 0.0;
    double mean_min_distance = 0.0;
    bool has_means = false;
};

MetricPoint aggregate(const StatsDump& dump, const DumpCombination& combo,
                      int yaw_filter /* 999 = all yaws */) {
    MetricPoint point;
    double angle_sum = 0.0, dist_sum = 0.0;
    std::int64_t with_matches = 0;
    for (const DumpPair& pair : combo.pairs) {
        const PoseLabel& q = dump.query_poses[pair.query];
        const PoseLabel& t = dump.template_poses[pair.tmpl];
        if (q.point_id != t.point_id) {
            continue;
        }
        if (yaw_filter != 999 && q.yaw != yaw_filter) {
            continue;
        }
        point.n_correct += std::int64_t(pair.n_correct);
        if (pair.n_correct > 0 && pair.has_distance) {
            angle_sum += pair.mean_angle_diff;
            dist_sum += pair.min_distance;
            ++with_matches;
        }
    }
    if (with_matches > 0) {
        point.mean_angle_diff = angle_sum / double(with_matches);
        point.mean_min_distance = dist_sum / double(with_matches);
        point.has_means = true;
    }
    return point;
}

void write_scatter(const fs::path& path, const StatsDump& dump) {
    std::ofstream out = open_output(path);
    out << "# config_hash=" << dump.config_hash << " seed=" << dump.seed << "\n";
    out << "yaw\tdetector\tdescriptor\tpairs\tmean_n_correct\tmean_angle_diff\t"
           "mean_min_distance\n";
    for (const int yaw : {-30, -15, 0, 15, 30}) {
        for (const DumpCombination& combo : dump.combinations) {
            std::int64_t pairs = 0;
            for (const DumpPair& pair : combo.pairs) {
                const PoseLabel& q = dump.query_poses[pair.query];
                if (q.point_id == dump.template_poses[pair.tmpl].point_id && q.yaw == yaw) {
                    ++pairs;
                }
            }
            const MetricPoint point = aggregate(dump, combo, yaw);
            const double mean_n =
                pairs > 0 ? double(point.n_correct) / double(pairs)
                          : std::numeric_limits<double>::quiet_NaN();
            out << yaw << "\t" << combo.detector << "\t" << combo.descriptor << "\t" << pairs
                << "\t" << format3(mean_n) << "\t"
                << format3(point.has_means ? point.mean_angle_diff
                                           : std::numeric_limits<double>::quiet_NaN())
                << "\t"
                << format3(point.has_means ? point.mean_min_distance
                                           : std::numeric_limits<double>::quiet_NaN())
                << "\n";
        }
    }
    finish_output(out, path);
}

void write_ranking(const fs::path& path, const StatsDump& dump,
                   const std::vector<std::string>& axes) {
    std::vector<MetricPoint> points;
    points.reserve(dump.combinations.size());
    for (const DumpCombination& combo : dump.combinations) {
        points.push_back(aggregate(dump, combo, 999));
    }

    // Min-max normalization per axis over the combinations that have a
    // metric point at all; a flat axis contributes nothing to distances.
    std::vector<std::size_t> plotted;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].has_means) {
            plotted.push_back(i);
        }
    }
    auto normalizer = [&](auto getter) {
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (std::size_t i : plotted) {
            const double v = getter(points[i]);
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
        const double range = hi - lo;
        return [lo, range, getter](const MetricPoint& p) {
            return range > 0.0 ? (getter(p) - lo) / range : 0.5;
        };
    };
    const auto norm_n = normalizer([](const MetricPoint& p) { return double(p.n_correct); });
    const auto norm_angle = normalizer([](const MetricPoint& p) { return p.mean_angle_diff; });
    const auto norm_dist = normalizer([](const MetricPoint& p) { return p.mean_min_distance; });

    bool use_n = false, use_angle = false, use_dist = false;
    for (const std::string& axis : axes) {
        if (axis == "n_correct") {
            use_n = true;
        } else if (axis == "mean_angle_diff") {
            use_angle = true;
        } else if (axis == "min_distance") {
            use_dist = true;
        } else {
            throw ConfigError("unknown ranking axis \"" + axis +
                              "\" (expected n_correct, mean_angle_diff, min_distance)");
        }
    }

    // Best combination: the one with the most correct matches (earlier in
    // the dump on ties); ranking distance is measured to its point.
    std::vector<double> distance(points.size(), std::numeric_limits<double>::quiet_NaN());
    if (!plotted.empty()) {
        std::size_t best = plotted.front();
        for (std::size_t i : plotted) {
            if (points[i].n_correct > points[best].n_correct) {
                best = i;
            }
        }
        for (std::size_t i : plotted) {
            double sq = 0.0;
            if (use_n) {
                const double d = norm_n(points[i]) - norm_n(points[best]);
                sq += d * d;
            }
            if (use_angle) {
                const double d = norm_angle(points[i]) - norm_angle(points[best]);
                sq += d * d;
            }
            if (use_dist) {
                const double d = norm_dist(points[i]) - norm_dist(points[best]);
                sq += d * d;
            }
            distance[i] = std::sqrt(sq);
        }
    }

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const bool have_a = !std::isnan(distance[a]), have_b = !std::isnan(distance[b]);
        if (have_a != have_b) {
            return have_a;  // combinations with no matches sink to the bottom
        }
        if (have_a && distance[a] != distance[b]) {
            return distance[a] < distance[b];
        }
        return a < b;
    });

    std::ofstream out = open_output(path);
    out << "# config_hash=" << dump.config_hash << " seed=" << dump.seed << "\n";
    out << "rank\tdetector\tdescriptor\tn_correct\tmean_angle_diff\tmean_min_distance\t"
           "distance_to_best\n";
    int rank = 0;
    for (std::size_t i : order) {
        const DumpCombination& combo = dump.combinations[i];
        const MetricPoint& point = points[i];
        char dist_buf[64];
        if (std::isnan(distance[i])) {
            std::snprintf(dist_buf, sizeof(dist_buf), "nan");
        } else {
            std::snprintf(dist_buf, sizeof(dist_buf), "%.6f", distance[i]);
        }
        out << ++rank << "\t" << combo.detector << "\t" << combo.descriptor << "\t"
            << point.n_correct << "\t"
            << format3(point.has_means ? point.mean_angle_diff
                                       : std::numeric_limits<double>::quiet_NaN())
            << "\t"
            << format3(point.has_means ? point.mean_min_distance
                                       : std::numeric_limits<double>::quiet_NaN())
            << "\t" << dist_buf << "\n";
    }
    finish_output(out, path);
}

}  // namespace

std::string report_csv_row(const CombinationResult& result) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%s,%.3f,%.2f,%lld,%.3f",
                  detector_name(result.combination.detector),
                  descriptor_name(result.combination.descriptor), result.total_time_sec,
                  result.accuracy_pct, static_cast<long long>(result.ground_truth_cases),
                  result.correct_matches_per_sec);
    return buf;
}

void write_run_reports(const std::string& output_dir, const RunConfig& config,
                       const EvalPlan& plan, const std::vector<CombinationResult>& results) {
    fs::create_directories(output_dir);
    const fs::path dir(output_dir);
    write_csv(dir / "report.csv", config, results);
    write_stats(dir / "stats.json", config, plan, results);
    write_timing(dir / "timing.json", config, plan, results);
    write_metadata(dir / "metadata.json", config);
}

void write_plot_data(const ReportOptions& options) {
    std::vector<std::string> axes = options.axes;
    if (axes.empty()) {
        axes = {"n_correct", "mean_angle_diff", "min_distance"};
    }
    const StatsDump dump = load_stats_dump(options.stats_path);
    fs::create_directories(options.output_dir);
    const fs::path dir(options.output_dir);
    write_scatter(dir / "scatter.tsv", dump);
    write_ranking(dir / "ranking.tsv", dump, axes);
}

}  // namespace featbench
