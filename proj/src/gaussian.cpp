#include "featbench/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace featbench {

float FloatImage::clamped_at(int x, int y) const {
    x = std::clamp(x, 0, width - 1);
    y = std::clamp(y, 0, height - 1);
    return data[static_cast<std::size_t>(y) * width + x];
}

FloatImage FloatImage::from(const Image& img) {
    FloatImage out(img.width(), img.height());
    for (std::size_t i = 0; i < img.pixels().size(); ++i)
        out.data[i] = static_cast<float>(img.pixels()[i]);
    return out;
}

Image FloatImage::to_image() const {
    std::vector<std::uint8_t> pixels(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        const long v = std::lround(static_cast<double>(data[i]));
        pixels[i] = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
    }
    return Image(width, height, std::move(pixels));
}

std::vector<double> gaussian_kernel(double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_kernel: sigma must be positive");
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        kernel[i + radius] = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        sum += kernel[i + radius];
    }
    for (double& w : kernel)
        w /= sum;
    return kernel;
}

FloatImage gaussian_blur(const FloatImage& img, double sigma) {
    const std::vector<double> kernel = gaussian_kernel(sigma);
    const int radius = static_cast<int>(kernel.size() / 2);

    FloatImage horizontal(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[k + radius] * img.clamped_at(x + k, y);
            horizontal.at(x, y) = static_cast<float>(acc);
        }
    }

    FloatImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int k = -radius; k <= radius; ++k)
                acc += kernel[k + radius] * horizontal.clamped_at(x, y + k);
            out.at(x, y) = static_cast<float>(acc);
        }
    }
    return out;
}

Image gaussian_blur(const Image& img, double sigma) {
    return gaussian_blur(FloatImage::from(img), sigma).to_image();
}

FloatImage resize_bilinear(const FloatImage& img, int new_width, int new_height) {
    if (new_width <= 0 || new_height <= 0)
        throw std::invalid_argument("resize_bilinear: target dimensions must be positive");
    FloatImage out(new_width, new_height);
    const double x_scale = static_cast<double>(img.width) / new_width;
    const double y_scale = static_cast<double>(img.height) / new_height;
    for (int y = 0; y < new_height; ++y) {
        const double sy = std::max(0.0, (y + 0.5) * y_scale - 0.5);
        const int y0 = std::min(static_cast<int>(sy), img.height - 1);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double fy = sy - y0;
        for (int x = 0; x < new_width; ++x) {
            const double sx = std::max(0.0, (x + 0.5) * x_scale - 0.5);
            const int x0 = std::min(static_cast<int>(sx), img.width - 1);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double fx = sx - x0;
            const double top = img.at(x0, y0) + fx * (img.at(x1, y0) - img.at(x0, y0));
            const double bottom = img.at(x0, y1) + fx * (img.at(x1, y1) - img.at(x0, y1));
            out.at(x, y) = static_cast<float>(top + fy * (bottom - top));
        }
    }
    return out;
}

Image resize_bilinear(const Image& img, int new_width, int new_height) {
    return resize_bilinear(FloatImage::from(img), new_width, new_height).to_image();
}

} // namespace featbench
