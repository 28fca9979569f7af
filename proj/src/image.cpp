#include "featbench/image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace featbench {

Image::Image(int width, int height) : Image(width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width > 0 ? width : 0) * (height > 0 ? height : 0))) {}

Image::Image(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width_ <= 0 || height_ <= 0)
        throw std::invalid_argument("Image: dimensions must be positive, got " + std::to_string(width_) + "x" + std::to_string(height_));
    if (pixels_.size() != static_cast<std::size_t>(width_) * height_)
        throw std::invalid_argument("Image: pixel buffer size does not match dimensions");
}

std::uint8_t Image::clamped_at(int x, int y) const {
    x = std::clamp(x, 0, width_ - 1);
    y = std::clamp(y, 0, height_ - 1);
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
}

std::size_t Image::index(int x, int y) const {
    if (!in_bounds(x, y))
        throw std::out_of_range("Image: pixel (" + std::to_string(x) + ", " + std::to_string(y) + ") outside " + std::to_string(width_) + "x" + std::to_string(height_));
    return static_cast<std::size_t>(y) * width_ + x;
}

IntegralImage::IntegralImage(const Image& img)
    : width_(img.width()), height_(img.height()), table_(static_cast<std::size_t>(width_ + 1) * (height_ + 1), 0) {
    const std::size_t stride = static_cast<std::size_t>(width_) + 1;
    for (int y = 0; y < height_; ++y) {
        std::uint64_t row_sum = 0;
        for (int x = 0; x < width_; ++x) {
            row_sum += img.at(x, y);
            table_[(y + 1) * stride + (x + 1)] = table_[y * stride + (x + 1)] + row_sum;
        }
    }
}

std::uint64_t IntegralImage::box_sum(int x0, int y0, int x1, int y1) const {
    if (x0 > x1 || y0 > y1)
        throw std::out_of_range("IntegralImage::box_sum: inverted rectangle");
    if (x0 < 0 || y0 < 0 || x1 >= width_ || y1 >= height_)
        throw std::out_of_range("IntegralImage::box_sum: rectangle [" + std::to_string(x0) + "," + std::to_string(y0) + "]..[" + std::to_string(x1) + "," + std::to_string(y1) + "] outside " + std::to_string(width_) + "x" + std::to_string(height_));
    return entry(x1 + 1, y1 + 1) - entry(x0, y1 + 1) - entry(x1 + 1, y0) + entry(x0, y0);
}

std::uint64_t IntegralImage::box_sum_clipped(int x0, int y0, int x1, int y1) const {
    x0 = std::max(x0, 0);
    y0 = std::max(y0, 0);
    x1 = std::min(x1, width_ - 1);
    y1 = std::min(y1, height_ - 1);
    if (x0 > x1 || y0 > y1)
        return 0;
    return box_sum(x0, y0, x1, y1);
}

} // namespace featbench
