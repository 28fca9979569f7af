#include "featbench/localize.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "featbench/errors.hpp"

namespace featbench {

using nlohmann::json;
using nlohmann::ordered_json;

const GridGeometry::Entry* GridGeometry::find(const PoseLabel& pose) const {
    for (const Entry& entry : entries) {
        if (entry.pose == pose) {
            return &entry;
        }
    }
    return nullptr;
}

GridGeometry geometry_from_json(const json& j) {
    if (!j.is_object() || !j.contains("poses") || !j["poses"].is_array()) {
        throw IoError("grid geometry: expected an object with a \"poses\" array");
    }
    GridGeometry geometry;
    for (const json& entry : j["poses"]) {
        GridGeometry::Entry e;
        try {
            e.pose.point_id = entry.at("point").get<int>();
            e.pose.height_level = entry.at("height").get<int>();
            e.pose.yaw = entry.at("yaw").get<int>();
            e.position = {entry.at("x").get<double>(), entry.at("y").get<double>(),
                          entry.at("z").get<double>()};
        } catch (const json::exception& ex) {
            throw IoError(std::string("grid geometry: ") + ex.what());
        }
        try {
            validate_pose(e.pose);
        } catch (const ConfigError& ex) {
            throw IoError(std::string("grid geometry: ") + ex.what());
        }
        if (geometry.find(e.pose) != nullptr) {
            throw IoError("grid geometry: duplicate pose point=" + std::to_string(e.pose.point_id) +
                          " height=" + std::to_string(e.pose.height_level) +
                          " yaw=" + std::to_string(e.pose.yaw));
        }
        geometry.entries.push_back(e);
    }
    return geometry;
}

ordered_json geometry_to_json(const GridGeometry& geometry) {
    ordered_json poses = ordered_json::array();
    for (const GridGeometry::Entry& e : geometry.entries) {
        poses.push_back({{"point", e.pose.point_id},
                         {"height", e.pose.height_level},
                         {"yaw", e.pose.yaw},
                         {"x", e.position[0]},
                         {"y", e.position[1]},
                         {"z", e.position[2]}});
    }
    ordered_json j;
    j["poses"] = std::move(poses);
    return j;
}

GridGeometry load_geometry(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open grid geometry: " + path);
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw IoError("grid geometry " + path + ": " + e.what());
    }
    return geometry_from_json(j);
}

void save_geometry(const GridGeometry& geometry, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write grid geometry: " + path);
    }
    out << geometry_to_json(geometry).dump(2) << "\n";
    if (!out) {
        throw IoError("failed writing grid geometry: " + path);
    }
}

LocationCube localize(const PoseLabel& matched, const GridGeometry& geometry) {
    const int neighbor_yaw = matched.yaw + 15 <= 30 ? matched.yaw + 15 : matched.yaw - 15;

    LocationCube cube;
    for (int height = 0; height < 3; ++height) {
        for (const int yaw : {matched.yaw, neighbor_yaw}) {
            const PoseLabel candidate{matched.point_id, height, yaw};
            const GridGeometry::Entry* entry = geometry.find(candidate);
            if (entry == nullptr) {
                throw std::out_of_range("localize: pose point=" + std::to_string(candidate.point_id) +
                                        " height=" + std::to_string(height) +
                                        " yaw=" + std::to_string(yaw) +
                                        " absent from grid geometry");
            }
            cube.candidates.push_back(entry->position);
        }
    }

    std::array<double, 3> lo = cube.candidates.front();
    std::array<double, 3> hi = cube.candidates.front();
    for (const std::array<double, 3>& c : cube.candidates) {
        for (int axis = 0; axis < 3; ++axis) {
            lo[axis] = std::min(lo[axis], c[axis]);
            hi[axis] = std::max(hi[axis], c[axis]);
        }
    }
    for (int i = 0; i < 8; ++i) {
        cube.corners[i] = {i & 1 ? hi[0] : lo[0], i & 2 ? hi[1] : lo[1], i & 4 ? hi[2] : lo[2]};
    }
    cube.center = {(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0, (lo[2] + hi[2]) / 2.0};
    return cube;
}

}  // namespace featbench
