#pragma once

#include <cstdint>
#include <string>

#include "featbench/localize.hpp"
#include "featbench/manifest.hpp"

namespace featbench {

/// Parameters of the synthetic pose-grid dataset.
struct SyntheticConfig {
    std::string output_dir;
    int n_points = 5;
    int width = 555;
    int height = 480;
    std::uint64_t seed = 42;
};

/// Where the generator put everything; `manifest` carries resolved paths.
struct SyntheticDataset {
    DatasetManifest manifest;
    GridGeometry geometry;
    std::string manifest_path;
    std::string geometry_path;
};

/// Renders one textured scene per capture point and emits its pose grid:
/// 15 query crops (3 height levels x yaws {-30,-15,0,15,30}, rotated
/// in-plane about the crop center) plus one template (the 0-degree,
/// middle-height crop, written pixel-identically to that query). Writes the
/// PGM images, manifest.txt, and grid_geometry.json into output_dir; fully
/// deterministic for a given seed. Throws ConfigError on bad parameters and
/// IoError when the directory is not writable.
SyntheticDataset generate_synthetic(const SyntheticConfig& config);

}  // namespace featbench
