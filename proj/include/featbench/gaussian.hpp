#pragma once

#include <vector>

#include "featbench/image.hpp"

namespace featbench {

/// Single-channel float raster used for blur and scale-space intermediates.
struct FloatImage {
    int width = 0;
    int height = 0;
    std::vector<float> data;

    FloatImage() = default;
    FloatImage(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0.0f) {}

    float at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    float& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }

    float clamped_at(int x, int y) const;

    static FloatImage from(const Image& img);
    /// Rounds to nearest and clamps to [0, 255].
    Image to_image() const;
};

/// Normalized 1-D Gaussian kernel of radius ceil(3*sigma); size 2*radius+1.
std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian blur with clamp-to-edge borders.
/// Requires sigma > 0; throws std::invalid_argument otherwise.
FloatImage gaussian_blur(const FloatImage& img, double sigma);

/// 8-bit convenience wrapper: blurs in float and requantizes by rounding.
Image gaussian_blur(const Image& img, double sigma);

/// Bilinear resampling to the given dimensions (both must be positive).
FloatImage resize_bilinear(const FloatImage& img, int new_width, int new_height);
Image resize_bilinear(const Image& img, int new_width, int new_height);

} // namespace featbench
