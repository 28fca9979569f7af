#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "featbench/detect.hpp"
#include "featbench/gaussian.hpp"

namespace featbench {

namespace {

constexpr int kBorder = 5;          // refinement needs a safety margin
constexpr int kMaxInterpSteps = 5;
constexpr double kAssumedBlur = 0.5; // camera blur assumed in the input
constexpr int kOrientationBins = 36;

struct OctaveStack {
    std::vector<FloatImage> gauss;
    std::vector<FloatImage> dog;
};

OctaveStack build_octave(FloatImage base, int scales, double base_sigma) {
    const double k = std::pow(2.0, 1.0 / scales);
    OctaveStack stack;
    stack.gauss.push_back(std::move(base));
    for (int i = 1; i < scales + 3; ++i) {
        const double sig_prev = base_sigma * std::pow(k, i - 1);
        const double sig_total = sig_prev * k;
        const double sig_inc = std::sqrt(sig_total * sig_total - sig_prev * sig_prev);
        stack.gauss.push_back(gaussian_blur(stack.gauss.back(), sig_inc));
    }
    for (int i = 0; i < scales + 2; ++i) {
        FloatImage d(stack.gauss[i].width, stack.gauss[i].height);
        for (std::size_t p = 0; p < d.data.size(); ++p)
            d.data[p] = stack.gauss[i + 1].data[p] - stack.gauss[i].data[p];
        stack.dog.push_back(std::move(d));
    }
    return stack;
}

FloatImage decimate(const FloatImage& img) {
    FloatImage out(img.width / 2, img.height / 2);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x)
            out.at(x, y) = img.at(2 * x, 2 * y);
    return out;
}

bool is_extremum(const std::vector<FloatImage>& dog, int layer, int x, int y) {
    const float v = dog[layer].at(x, y);
    bool is_max = true, is_min = true;
    for (int dl = -1; dl <= 1 && (is_max || is_min); ++dl) {
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                if (dl == 0 && dx == 0 && dy == 0)
                    continue;
                const float n = dog[layer + dl].at(x + dx, y + dy);
                if (n >= v) is_max = false;
                if (n <= v) is_min = false;
            }
        }
    }
    return is_max || is_min;
}

struct Refined {
    double dx, dy, ds;  // offset from the integer extremum
    double contrast;    // interpolated DoG value
};

bool refine_extremum(const std::vector<FloatImage>& dog, int& layer, int& x, int& y, int max_layer, Refined& out) {
    for (int step = 0; step < kMaxInterpSteps; ++step) {
        const FloatImage& cur = dog[layer];
        const FloatImage& up = dog[layer + 1];
        const FloatImage& dn = dog[layer - 1];

        const double gx = 0.5 * (cur.at(x + 1, y) - cur.at(x - 1, y));
        const double gy = 0.5 * (cur.at(x, y + 1) - cur.at(x, y - 1));
        const double gs = 0.5 * (up.at(x, y) - dn.at(x, y));

        const double v = cur.at(x, y);
        const double dxx = cur.at(x + 1, y) + cur.at(x - 1, y) - 2.0 * v;
        const double dyy = cur.at(x, y + 1) + cur.at(x, y - 1) - 2.0 * v;
        const double dss = up.at(x, y) + dn.at(x, y) - 2.0 * v;
        const double dxy = 0.25 * (cur.at(x + 1, y + 1) - cur.at(x - 1, y + 1) - cur.at(x + 1, y - 1) + cur.at(x - 1, y - 1));
        const double dxs = 0.25 * (up.at(x + 1, y) - up.at(x - 1, y) - dn.at(x + 1, y) + dn.at(x - 1, y));
        const double dys = 0.25 * (up.at(x, y + 1) - up.at(x, y - 1) - dn.at(x, y + 1) + dn.at(x, y - 1));

        // Solve H * delta = -g by Cramer's rule.
        const double det = dxx * (dyy * dss - dys * dys) - dxy * (dxy * dss - dys * dxs) + dxs * (dxy * dys - dyy * dxs);
        if (std::abs(det) < 1e-30)
            return false;
        const double ddx = (-gx * (dyy * dss - dys * dys) - dxy * (-gy * dss - dys * -gs) + dxs * (-gy * dys - dyy * -gs)) / det;
        const double ddy = (dxx * (-gy * dss - dys * -gs) - -gx * (dxy * dss - dys * dxs) + dxs * (dxy * -gs - -gy * dxs)) / det;
        const double dds = (dxx * (dyy * -gs - -gy * dys) - dxy * (dxy * -gs - -gy * dxs) + -gx * (dxy * dys - dyy * dxs)) / det;

        if (std::abs(ddx) < 0.5 && std::abs(ddy) < 0.5 && std::abs(dds) < 0.5) {
            out = {ddx, ddy, dds, v + 0.5 * (gx * ddx + gy * ddy + gs * dds)};
            return true;
        }
        x += static_cast<int>(std::lround(ddx));
        y += static_cast<int>(std::lround(ddy));
        layer += static_cast<int>(std::lround(dds));
        if (layer < 1 || layer > max_layer || x < kBorder || x >= cur.width - kBorder || y < kBorder || y >= cur.height - kBorder)
            return false;
    }
    return false;
}

bool passes_edge_test(const FloatImage& dog, int x, int y, double edge_ratio) {
    const double v = dog.at(x, y);
    const double dxx = dog.at(x + 1, y) + dog.at(x - 1, y) - 2.0 * v;
    const double dyy = dog.at(x, y + 1) + dog.at(x, y - 1) - 2.0 * v;
    const double dxy = 0.25 * (dog.at(x + 1, y + 1) - dog.at(x - 1, y + 1) - dog.at(x + 1, y - 1) + dog.at(x - 1, y - 1));
    const double tr = dxx + dyy;
    const double det = dxx * dyy - dxy * dxy;
    if (det <= 0.0)
        return false;
    return tr * tr / det < (edge_ratio + 1.0) * (edge_ratio + 1.0) / edge_ratio;
}

/// 36-bin gradient-orientation histogram around (x, y); peak angles in
/// radians. A histogram with no strict local maximum (isotropic patch)
/// yields the single angle 0.
std::vector<float> orientation_peaks(const FloatImage& img, int x, int y, double sigma_octave) {
    const int radius = std::max(1, static_cast<int>(std::lround(4.5 * sigma_octave)));
    const double weight_denom = 2.0 * (1.5 * sigma_octave) * (1.5 * sigma_octave);
    std::array<double, kOrientationBins> hist{};

    for (int v = -radius; v <= radius; ++v) {
        for (int u = -radius; u <= radius; ++u) {
            const int px = x + u;
            const int py = y + v;
            if (px < 1 || px >= img.width - 1 || py < 1 || py >= img.height - 1)
                continue;
            const double dx = img.at(px + 1, py) - img.at(px - 1, py);
            const double dy = img.at(px, py + 1) - img.at(px, py - 1);
            const double mag = std::sqrt(dx * dx + dy * dy);
            if (mag == 0.0)
                continue;
            double angle = std::atan2(dy, dx);
            if (angle < 0.0)
                angle += 2.0 * std::numbers::pi;
            int bin = static_cast<int>(angle / (2.0 * std::numbers::pi) * kOrientationBins);
            if (bin >= kOrientationBins) bin = 0;
            hist[bin] += mag * std::exp(-(static_cast<double>(u) * u + static_cast<double>(v) * v) / weight_denom);
        }
    }

    std::array<double, kOrientationBins> smooth;
    for (int i = 0; i < kOrientationBins; ++i) {
        const auto wrap = [](int b) { return (b + kOrientationBins) % kOrientationBins; };
        smooth[i] = (hist[wrap(i - 2)] + hist[wrap(i + 2)]) / 16.0 +
                    4.0 * (hist[wrap(i - 1)] + hist[wrap(i + 1)]) / 16.0 + 6.0 * hist[i] / 16.0;
    }

    const double peak_floor = 0.8 * *std::max_element(smooth.begin(), smooth.end());
    std::vector<float> peaks;
    for (int i = 0; i < kOrientationBins; ++i) {
        const double left = smooth[(i + kOrientationBins - 1) % kOrientationBins];
        const double right = smooth[(i + 1) % kOrientationBins];
        if (smooth[i] <= left || smooth[i] <= right || smooth[i] < peak_floor)
            continue;
        const double interp = i + 0.5 * (left - right) / (left - 2.0 * smooth[i] + right);
        double angle = (interp + 0.5) * 2.0 * std::numbers::pi / kOrientationBins;
        angle = std::fmod(angle + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
        peaks.push_back(static_cast<float>(angle));
    }
    if (peaks.empty())
        peaks.push_back(0.0f);
    return peaks;
}

} // namespace

KeypointList sift_detect(const Image& img, const DetectorParams& params) {
    params.validate();
    if (img.width() < 64 || img.height() < 64)
        throw std::invalid_argument("sift_detect: image must be at least 64x64, got " + std::to_string(img.width()) + "x" + std::to_string(img.height()));

    const int scales = params.sift.scales_per_octave;
    const double base_sigma = params.sift.base_sigma;
    const double k = std::pow(2.0, 1.0 / scales);
    const int min_dim = std::min(img.width(), img.height());
    const int n_octaves = params.sift.octaves > 0
        ? params.sift.octaves
        : static_cast<int>(std::floor(std::log2(min_dim / 16.0))) + 1;

    FloatImage base(img.width(), img.height());
    for (std::size_t i = 0; i < base.data.size(); ++i)
        base.data[i] = static_cast<float>(img.pixels()[i]) / 255.0f;
    base = gaussian_blur(base, std::sqrt(std::max(base_sigma * base_sigma - kAssumedBlur * kAssumedBlur, 0.01)));

    const float prefilter = static_cast<float>(0.5 * params.sift.contrast_thresh / scales);

    KeypointList keypoints;
    for (int octave = 0; octave < n_octaves; ++octave) {
        if (base.width < 4 * kBorder || base.height < 4 * kBorder)
            break;
        OctaveStack stack = build_octave(std::move(base), scales, base_sigma);

        for (int layer = 1; layer <= scales; ++layer) {
            const FloatImage& dog = stack.dog[layer];
            for (int y = kBorder; y < dog.height - kBorder; ++y) {
                for (int x = kBorder; x < dog.width - kBorder; ++x) {
                    if (std::abs(dog.at(x, y)) <= prefilter || !is_extremum(stack.dog, layer, x, y))
                        continue;
                    int rl = layer, rx = x, ry = y;
                    Refined fit;
                    if (!refine_extremum(stack.dog, rl, rx, ry, scales, fit))
                        continue;
                    if (std::abs(fit.contrast) < params.sift.contrast_thresh)
                        continue;
                    if (!passes_edge_test(stack.dog[rl], rx, ry, params.sift.edge_ratio))
                        continue;

                    const double sigma_octave = base_sigma * std::pow(k, rl + fit.ds + 1.0);
                    const double factor = static_cast<double>(1 << octave);
                    const float bx = static_cast<float>(std::clamp((rx + fit.dx) * factor, 0.0, img.width() - 1.0));
                    const float by = static_cast<float>(std::clamp((ry + fit.dy) * factor, 0.0, img.height() - 1.0));
                    const float scale = static_cast<float>(sigma_octave * factor);

                    for (float angle : orientation_peaks(stack.gauss[rl], rx, ry, sigma_octave))
                        keypoints.push_back({bx, by, scale, angle, static_cast<float>(std::abs(fit.contrast)), octave});
                }
            }
        }

        base = decimate(stack.gauss[scales]);
    }
    return keypoints;
}

} // namespace featbench
