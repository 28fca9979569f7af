#pragma once

#include <cstdint>
#include <vector>

namespace featbench {

/// 8-bit grayscale raster stored row-major.
class Image {
public:
    Image(int width, int height);
    Image(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
    std::uint8_t& at(int x, int y) { return pixels_[index(x, y)]; }

    /// Reads with coordinates clamped to the image border.
    std::uint8_t clamped_at(int x, int y) const;

    bool in_bounds(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool operator==(const Image& other) const = default;

private:
    std::size_t index(int x, int y) const;

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// Summed-area table over an Image. Entries have one extra row and column
/// so that entry(x, y) is the sum of all pixels strictly above and to the
/// left of (x, y); entry(0, *) and entry(*, 0) are zero.
class IntegralImage {
public:
    explicit IntegralImage(const Image& img);

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint64_t entry(int x, int y) const { return table_[static_cast<std::size_t>(y) * (width_ + 1) + x]; }

    /// Sum of pixels in the inclusive rectangle [x0,x1] x [y0,y1].
    /// Throws std::out_of_range if the rectangle leaves the image.
    std::uint64_t box_sum(int x0, int y0, int x1, int y1) const;

    /// Like box_sum but clips the rectangle to the image first; an empty
    /// intersection sums to zero.
    std::uint64_t box_sum_clipped(int x0, int y0, int x1, int y1) const;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint64_t> table_;
};

inline IntegralImage integral(const Image& img) { return IntegralImage(img); }

} // namespace featbench
