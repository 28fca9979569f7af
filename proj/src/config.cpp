#include "featbench/config.hpp"

#include <fstream>
#include <initializer_list>
#include <stdexcept>

#include "featbench/errors.hpp"
#include "featbench/hashing.hpp"

namespace featbench {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& ctx) {
    if (!j.is_object()) {
        throw ConfigError(ctx + ": expected a JSON object");
    }
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError(ctx + ": unknown key \"" + item.key() + "\"");
        }
    }
}

DetectorParams detector_from_json(const json& j) {
    DetectorParams p;
    check_keys(j, {"fast_threshold", "fast_arc", "sift", "surf", "orb", "brisk"}, "detector");
    p.fast_threshold = j.value("fast_threshold", p.fast_threshold);
    p.fast_arc = j.value("fast_arc", p.fast_arc);
    if (j.contains("sift")) {
        const json& s = j["sift"];
        check_keys(s, {"octaves", "scales_per_octave", "base_sigma", "contrast_thresh",
                       "edge_ratio"},
                   "detector.sift");
        p.sift.octaves = s.value("octaves", p.sift.octaves);
        p.sift.scales_per_octave = s.value("scales_per_octave", p.sift.scales_per_octave);
        p.sift.base_sigma = s.value("base_sigma", p.sift.base_sigma);
        p.sift.contrast_thresh = s.value("contrast_thresh", p.sift.contrast_thresh);
        p.sift.edge_ratio = s.value("edge_ratio", p.sift.edge_ratio);
    }
    if (j.contains("surf")) {
        const json& s = j["surf"];
        check_keys(s, {"octaves", "hessian_thresh"}, "detector.surf");
        p.surf.octaves = s.value("octaves", p.surf.octaves);
        p.surf.hessian_thresh = s.value("hessian_thresh", p.surf.hessian_thresh);
    }
    if (j.contains("orb")) {
        const json& s = j["orb"];
        check_keys(s, {"n_features", "levels", "scale_factor"}, "detector.orb");
        p.orb.n_features = s.value("n_features", p.orb.n_features);
        p.orb.levels = s.value("levels", p.orb.levels);
        p.orb.scale_factor = s.value("scale_factor", p.orb.scale_factor);
    }
    if (j.contains("brisk")) {
        const json& s = j["brisk"];
        check_keys(s, {"octaves", "fast_threshold"}, "detector.brisk");
        p.brisk.octaves = s.value("octaves", p.brisk.octaves);
        p.brisk.fast_threshold = s.value("fast_threshold", p.brisk.fast_threshold);
    }
    return p;
}

ordered_json detector_to_json(const DetectorParams& p) {
    ordered_json j;
    j["fast_threshold"] = p.fast_threshold;
    j["fast_arc"] = p.fast_arc;
    j["sift"] = {{"octaves", p.sift.octaves},
                 {"scales_per_octave", p.sift.scales_per_octave},
                 {"base_sigma", p.sift.base_sigma},
                 {"contrast_thresh", p.sift.contrast_thresh},
                 {"edge_ratio", p.sift.edge_ratio}};
    j["surf"] = {{"octaves", p.surf.octaves}, {"hessian_thresh", p.surf.hessian_thresh}};
    j["orb"] = {{"n_features", p.orb.n_features},
                {"levels", p.orb.levels},
                {"scale_factor", p.orb.scale_factor}};
    j["brisk"] = {{"octaves", p.brisk.octaves}, {"fast_threshold", p.brisk.fast_threshold}};
    return j;
}

MatchParams match_from_json(const json& j) {
    MatchParams p;
    check_keys(j,
               {"ratio", "max_distance_binary256", "max_distance_binary512", "max_distance_real",
                "cross_check", "min_correct"},
               "match");
    p.ratio = j.value("ratio", p.ratio);
    p.max_distance_binary256 = j.value("max_distance_binary256", p.max_distance_binary256);
    p.max_distance_binary512 = j.value("max_distance_binary512", p.max_distance_binary512);
    p.max_distance_real = j.value("max_distance_real", p.max_distance_real);
    p.cross_check = j.value("cross_check", p.cross_check);
    p.min_correct = j.value("min_correct", p.min_correct);
    return p;
}

ordered_json match_to_json(const MatchParams& p) {
    ordered_json j;
    j["ratio"] = p.ratio;
    j["max_distance_binary256"] = p.max_distance_binary256;
    j["max_distance_binary512"] = p.max_distance_binary512;
    j["max_distance_real"] = p.max_distance_real;
    j["cross_check"] = p.cross_check;
    j["min_correct"] = p.min_correct;
    return j;
}

EliminationParams elimination_from_json(const json& j) {
    EliminationParams p;
    check_keys(j, {"count_lower", "count_upper", "histogram_threshold"}, "elimination");
    p.count_lower = j.value("count_lower", p.count_lower);
    p.count_upper = j.value("count_upper", p.count_upper);
    p.histogram_threshold = j.value("histogram_threshold", p.histogram_threshold);
    return p;
}

ordered_json elimination_to_json(const EliminationParams& p) {
    ordered_json j;
    j["count_lower"] = p.count_lower;
    j["count_upper"] = p.count_upper;
    j["histogram_threshold"] = p.histogram_threshold;
    return j;
}

/// The fields that determine run results; paths, workers, and cache switches
/// stay out so the same experiment hashes alike across machines.
ordered_json hash_payload(const RunConfig& config) {
    ordered_json j;
    ordered_json combos = ordered_json::array();
    for (const CombinationId& id : config.selected_combinations()) {
        combos.push_back(combination_name(id));
    }
    j["combinations"] = std::move(combos);
    j["detector"] = detector_to_json(config.detector);
    j["match"] = match_to_json(config.match);
    j["elimination"] = elimination_to_json(config.elimination);
    j["max_keypoints"] = config.max_keypoints;
    j["seed"] = config.seed;
    j["accuracy_policy"] = accuracy_policy_name(config.accuracy_policy);
    return j;
}

}  // namespace

double MatchParams::max_distance_for(const Descriptor& d) const {
    if (d.kind == DescriptorVariant::binary) {
        return d.bit_length == 512 ? max_distance_binary512 : max_distance_binary256;
    }
    return max_distance_real;
}

void MatchParams::validate() const {
    if (!(ratio > 0.0 && ratio <= 1.0)) {
        throw ConfigError("match.ratio must be in (0,1], got " + std::to_string(ratio));
    }
    if (max_distance_binary256 <= 0.0 || max_distance_binary512 <= 0.0 ||
        max_distance_real <= 0.0) {
        throw ConfigError("match.max_distance_* must be positive");
    }
    if (min_correct < 1) {
        throw ConfigError("match.min_correct must be at least 1");
    }
}

void EliminationParams::validate() const {
    if (count_lower >= count_upper) {
        throw ConfigError("elimination.count_lower must be below count_upper");
    }
    if (histogram_threshold < 0.0 || histogram_threshold > 1.0) {
        throw ConfigError("elimination.histogram_threshold must be in [0,1]");
    }
}

const char* accuracy_policy_name(AccuracyPolicy policy) {
    return policy == AccuracyPolicy::own_template ? "own_template" : "all_pairs";
}

AccuracyPolicy parse_accuracy_policy(const std::string& name) {
    if (name == "own_template") return AccuracyPolicy::own_template;
    if (name == "all_pairs") return AccuracyPolicy::all_pairs;
    throw ConfigError("unknown accuracy policy \"" + name +
                      "\" (expected own_template or all_pairs)");
}

void RunConfig::validate() const {
    try {
        detector.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("detector: ") + e.what());
    }
    match.validate();
    elimination.validate();
    if (workers < 1) {
        throw ConfigError("workers must be at least 1");
    }
    selected_combinations();  // rejects unknown names
}

std::vector<CombinationId> RunConfig::selected_combinations() const {
    if (combinations.empty()) {
        return combination_matrix();
    }
    // Explicit selections are reported in matrix order, duplicates collapsed.
    std::vector<CombinationId> picked;
    for (const std::string& name : combinations) {
        const CombinationId id = parse_combination(name);
        bool seen = false;
        for (const CombinationId& existing : picked) {
            if (existing == id) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            picked.push_back(id);
        }
    }
    std::vector<CombinationId> ordered;
    for (const CombinationId& id : combination_matrix()) {
        for (const CombinationId& p : picked) {
            if (p == id) {
                ordered.push_back(id);
                break;
            }
        }
    }
    return ordered;
}

RunConfig config_from_json(const json& j) {
    RunConfig config;
    check_keys(j,
               {"manifest", "combinations", "detector", "match", "elimination", "max_keypoints",
                "seed", "accuracy_policy", "workers", "output_dir", "cache", "cache_dir"},
               "config");
    try {
        config.manifest_path = j.value("manifest", config.manifest_path);
        if (j.contains("combinations")) {
            const json& c = j["combinations"];
            if (c.is_string()) {
                if (c.get<std::string>() != "all") {
                    throw ConfigError("config.combinations: expected \"all\" or a name array");
                }
                config.combinations.clear();
            } else {
                config.combinations = c.get<std::vector<std::string>>();
            }
        }
        if (j.contains("detector")) {
            config.detector = detector_from_json(j["detector"]);
        }
        if (j.contains("match")) {
            config.match = match_from_json(j["match"]);
        }
        if (j.contains("elimination")) {
            config.elimination = elimination_from_json(j["elimination"]);
        }
        config.max_keypoints = j.value("max_keypoints", config.max_keypoints);
        config.seed = j.value("seed", config.seed);
        if (j.contains("accuracy_policy")) {
            config.accuracy_policy = parse_accuracy_policy(j["accuracy_policy"].get<std::string>());
        }
        config.workers = j.value("workers", config.workers);
        config.output_dir = j.value("output_dir", config.output_dir);
        config.use_cache = j.value("cache", config.use_cache);
        config.cache_dir = j.value("cache_dir", config.cache_dir);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return config;
}

ordered_json config_to_json(const RunConfig& config) {
    ordered_json j;
    j["manifest"] = config.manifest_path;
    ordered_json combos = ordered_json::array();
    for (const CombinationId& id : config.selected_combinations()) {
        combos.push_back(combination_name(id));
    }
    j["combinations"] = std::move(combos);
    j["detector"] = detector_to_json(config.detector);
    j["match"] = match_to_json(config.match);
    j["elimination"] = elimination_to_json(config.elimination);
    j["max_keypoints"] = config.max_keypoints;
    j["seed"] = config.seed;
    j["accuracy_policy"] = accuracy_policy_name(config.accuracy_policy);
    j["workers"] = config.workers;
    j["output_dir"] = config.output_dir;
    j["cache"] = config.use_cache;
    j["cache_dir"] = config.cache_dir;
    return j;
}

std::uint64_t config_hash(const RunConfig& config) {
    return fnv1a64(hash_payload(config).dump());
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    return config_from_json(j);
}

}  // namespace featbench
