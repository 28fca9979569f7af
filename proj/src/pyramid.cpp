#include "featbench/pyramid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "featbench/gaussian.hpp"

namespace featbench {

namespace {
constexpr int kMinLevelSize = 32;
}

Pyramid build_pyramid(const Image& base, int n_levels, double scale_factor) {
    if (n_levels < 1)
        throw std::invalid_argument("build_pyramid: n_levels must be >= 1, got " + std::to_string(n_levels));
    if (!(scale_factor > 1.0))
        throw std::invalid_argument("build_pyramid: scale_factor must be > 1");
    if (base.width() < kMinLevelSize || base.height() < kMinLevelSize)
        throw std::invalid_argument("build_pyramid: base image " + std::to_string(base.width()) + "x" + std::to_string(base.height()) + " too small for even one level");

    Pyramid pyramid;
    pyramid.levels.push_back({base, 1.0, 0.0});

    FloatImage current = FloatImage::from(base);
    for (int level = 1; level < n_levels; ++level) {
        const int w = static_cast<int>(std::floor(base.width() / std::pow(scale_factor, level)));
        const int h = static_cast<int>(std::floor(base.height() / std::pow(scale_factor, level)));
        if (w < kMinLevelSize || h < kMinLevelSize)
            break;

        // Anti-alias at the resolution we are leaving, then resample.
        const double step = static_cast<double>(current.width) / w;
        const double aa_sigma = 0.5 * std::sqrt(std::max(step * step - 1.0, 0.01));
        const FloatImage smoothed = gaussian_blur(current, aa_sigma);
        current = resize_bilinear(smoothed, w, h);

        const double base_units = static_cast<double>(base.width()) / smoothed.width;
        const double prev_sigma = pyramid.levels.back().blur_sigma;
        const double blur_sigma = std::hypot(prev_sigma, aa_sigma * base_units);
        pyramid.levels.push_back({current.to_image(), static_cast<double>(w) / base.width(), blur_sigma});
    }
    return pyramid;
}

} // namespace featbench
