#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace featbench {

/// Capture pose of one dataset image: which scene point the camera stood at,
/// which of the three height levels, and the in-plane yaw in degrees
/// (a multiple of 15 within [-30, 30]).
struct PoseLabel {
    int point_id = 0;
    int height_level = 0;
    int yaw = 0;

    bool operator==(const PoseLabel&) const = default;
};

/// Throws ConfigError when the label violates the pose-grid invariants.
void validate_pose(const PoseLabel& pose);

struct TemplateEntry {
    std::string path;
    PoseLabel pose;
    std::string object;
};

struct QueryEntry {
    std::string path;
    PoseLabel pose;
};

/// The dataset description consumed by the benchmark: reference (template)
/// images with the scene object they show, and the query images to match
/// against them.
struct DatasetManifest {
    std::vector<TemplateEntry> templates;
    std::vector<QueryEntry> queries;
};

/// Parses a line-oriented manifest file. Each non-blank, non-comment line is
///
///   template <path> point=<id> height=<level> yaw=<degrees> object=<name>
///   query <path> point=<id> height=<level> yaw=<degrees>
///
/// '#' starts a comment line. Relative image paths are resolved against the
/// manifest file's directory. Throws IoError on unreadable files or malformed
/// lines (with the line number), and on duplicate image paths.
DatasetManifest load_manifest(const std::string& path);

/// Writes the manifest in the format load_manifest reads. Image paths are
/// written as given (callers emit paths relative to the manifest directory).
void save_manifest(const DatasetManifest& manifest, const std::string& path);

}  // namespace featbench
