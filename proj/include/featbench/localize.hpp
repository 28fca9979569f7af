#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "featbench/manifest.hpp"

namespace featbench {

/// Physical coordinates, in meters, of every pose-grid cell the dataset was
/// captured at.
struct GridGeometry {
    struct Entry {
        PoseLabel pose;
        std::array<double, 3> position{};  ///< x, y, z
    };
    std::vector<Entry> entries;

    /// nullptr when the pose has no coordinates.
    const Entry* find(const PoseLabel& pose) const;
};

/// Decode {"poses": [{"point","height","yaw","x","y","z"}, ...]}.
/// Throws IoError on structural problems or duplicate poses.
GridGeometry geometry_from_json(const nlohmann::json& j);
nlohmann::ordered_json geometry_to_json(const GridGeometry& geometry);

GridGeometry load_geometry(const std::string& path);
void save_geometry(const GridGeometry& geometry, const std::string& path);

/// The localizer's output region: the candidate coordinates consistent with
/// a matched template pose, the axis-aligned cube they span (8 corners,
/// x-fastest/z-slowest order), and the cube center as the point estimate.
struct LocationCube {
    std::vector<std::array<double, 3>> candidates;
    std::array<std::array<double, 3>, 8> corners{};
    std::array<double, 3> center{};
};

/// Builds the cube over the matched pose's candidate cells: all 3 height
/// levels at the matched yaw and at its in-range 15-degree neighbor (+15,
/// or -15 when the match sits at the +30 grid edge) — 6 candidates.
/// Throws std::out_of_range when a candidate pose is missing from the
/// geometry.
LocationCube localize(const PoseLabel& matched, const GridGeometry& geometry);

}  // namespace featbench
