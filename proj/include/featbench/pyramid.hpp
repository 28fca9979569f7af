#pragma once

#include <vector>

#include "featbench/image.hpp"

namespace featbench {

struct PyramidLevel {
    Image image;
    double scale;       ///< level width / base width
    double blur_sigma;  ///< accumulated smoothing in base-image pixels
};

struct Pyramid {
    std::vector<PyramidLevel> levels;
};

/// Builds an n_levels image pyramid by repeated smoothing and bilinear
/// downsampling. Level k has dimensions floor(base / scale_factor^k); levels
/// that would fall below 32x32 are dropped, so the result may be shorter than
/// requested. Requires n_levels >= 1, scale_factor > 1, and a base image of
/// at least 32x32 (std::invalid_argument otherwise).
Pyramid build_pyramid(const Image& base, int n_levels, double scale_factor);

} // namespace featbench
