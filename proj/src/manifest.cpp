#include "featbench/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "featbench/errors.hpp"

namespace featbench {
namespace {

// Splits "key=value"; returns false when '=' is absent.
bool split_kv(const std::string& token, std::string& key, std::string& value) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
        return false;
    }
    key = token.substr(0, eq);
    value = token.substr(eq + 1);
    return true;
}

int parse_int(const std::string& value, const std::string& key, int line_no) {
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(value, &used);
        if (used != value.size()) {
            throw std::invalid_argument(value);
        }
        return parsed;
    } catch (const std::exception&) {
        throw IoError("manifest line " + std::to_string(line_no) + ": bad integer for " + key +
                      ": \"" + value + "\"");
    }
}

std::string resolve_path(const std::filesystem::path& base_dir, const std::string& p) {
    std::filesystem::path path(p);
    if (path.is_absolute()) {
        return path.string();
    }
    return (base_dir / path).string();
}

}  // namespace

void validate_pose(const PoseLabel& pose) {
    if (pose.point_id < 0) {
        throw ConfigError("pose point_id must be non-negative, got " +
                          std::to_string(pose.point_id));
    }
    if (pose.height_level < 0 || pose.height_level > 2) {
        throw ConfigError("pose height_level must be in {0,1,2}, got " +
                          std::to_string(pose.height_level));
    }
    if (pose.yaw < -30 || pose.yaw > 30 || pose.yaw % 15 != 0) {
        throw ConfigError("pose yaw must be a multiple of 15 in [-30,30], got " +
                          std::to_string(pose.yaw));
    }
}

DatasetManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open manifest: " + path);
    }
    const std::filesystem::path base_dir = std::filesystem::path(path).parent_path();

    DatasetManifest manifest;
    std::unordered_set<std::string> template_paths;
    std::unordered_set<std::string> query_paths;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string kind;
        if (!(tokens >> kind) || kind[0] == '#') {
            continue;  // blank or comment line
        }
        if (kind != "template" && kind != "query") {
            throw IoError("manifest line " + std::to_string(line_no) +
                          ": expected \"template\" or \"query\", got \"" + kind + "\"");
        }

        std::string image_path;
        if (!(tokens >> image_path)) {
            throw IoError("manifest line " + std::to_string(line_no) + ": missing image path");
        }

        PoseLabel pose;
        std::string object;
        bool have_point = false, have_height = false, have_yaw = false;
        std::string token;
        while (tokens >> token) {
            std::string key, value;
            if (!split_kv(token, key, value)) {
                throw IoError("manifest line " + std::to_string(line_no) +
                              ": expected key=value, got \"" + token + "\"");
            }
            if (key == "point") {
                pose.point_id = parse_int(value, key, line_no);
                have_point = true;
            } else if (key == "height") {
                pose.height_level = parse_int(value, key, line_no);
                have_height = true;
            } else if (key == "yaw") {
                pose.yaw = parse_int(value, key, line_no);
                have_yaw = true;
            } else if (key == "object") {
                object = value;
            } else {
                throw IoError("manifest line " + std::to_string(line_no) + ": unknown key \"" +
                              key + "\"");
            }
        }
        if (!have_point || !have_height || !have_yaw) {
            throw IoError("manifest line " + std::to_string(line_no) +
                          ": point=, height=, and yaw= are all required");
        }
        try {
            validate_pose(pose);
        } catch (const ConfigError& e) {
            throw IoError("manifest line " + std::to_string(line_no) + ": " + e.what());
        }

        const std::string resolved = resolve_path(base_dir, image_path);
        if (kind == "template") {
            if (object.empty()) {
                throw IoError("manifest line " + std::to_string(line_no) +
                              ": template lines require object=<name>");
            }
            if (!template_paths.insert(resolved).second) {
                throw IoError("manifest line " + std::to_string(line_no) +
                              ": duplicate template path " + image_path);
            }
            manifest.templates.push_back({resolved, pose, object});
        } else {
            if (!object.empty()) {
                throw IoError("manifest line " + std::to_string(line_no) +
                              ": query lines take no object=");
            }
            if (!query_paths.insert(resolved).second) {
                throw IoError("manifest line " + std::to_string(line_no) +
                              ": duplicate query path " + image_path);
            }
            manifest.queries.push_back({resolved, pose});
        }
    }

    if (manifest.templates.empty()) {
        throw IoError("manifest has no template lines: " + path);
    }
    return manifest;
}

void save_manifest(const DatasetManifest& manifest, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write manifest: " + path);
    }
    for (const TemplateEntry& t : manifest.templates) {
        out << "template " << t.path << " point=" << t.pose.point_id
            << " height=" << t.pose.height_level << " yaw=" << t.pose.yaw
            << " object=" << t.object << "\n";
    }
    for (const QueryEntry& q : manifest.queries) {
        out << "query " << q.path << " point=" << q.pose.point_id
            << " height=" << q.pose.height_level << " yaw=" << q.pose.yaw << "\n";
    }
    if (!out) {
        throw IoError("failed writing manifest: " + path);
    }
}

}  // namespace featbench
