#include <algorithm>
#include <cmath>
#include <numbers>

#include "featbench/describe.hpp"
#include "featbench/surf_internal.hpp"

namespace featbench {

namespace {

// Same rationale as the SIFT sigma cap: keep windows for footprint-style
// keypoint scales inside typical frames.
constexpr double kMaxScale = 5.0;

} // namespace

DescribeResult surf_describe(const Image& img, const KeypointList& kps) {
    const IntegralImage ii(img);

    DescribeResult result;
    for (const Keypoint& kp : kps) {
        const double s = std::clamp(static_cast<double>(kp.scale), 1.0, kMaxScale);
        float orientation = kp.orientation;
        if (orientation == 0.0f)
            orientation = surf_orientation(ii, kp.x, kp.y, static_cast<float>(s));

        const int haar = 2 * std::max(1, static_cast<int>(std::lround(s)));
        const int bound = static_cast<int>(std::ceil(s * 10.0 * std::numbers::sqrt2)) + haar + 2;
        const int cx = static_cast<int>(std::lround(kp.x));
        const int cy = static_cast<int>(std::lround(kp.y));
        if (cx < bound || cy < bound || cx >= img.width() - bound || cy >= img.height() - bound)
            continue;

        const double cos_t = std::cos(orientation);
        const double sin_t = std::sin(orientation);

        std::vector<float> values(64, 0.0f);
        for (int sy = 0; sy < 4; ++sy) {
            for (int sx = 0; sx < 4; ++sx) {
                double sum_dx = 0.0, sum_dy = 0.0, sum_adx = 0.0, sum_ady = 0.0;
                for (int v = 0; v < 5; ++v) {
                    for (int u = 0; u < 5; ++u) {
                        const double wx = -10.0 + 5.0 * sx + u + 0.5;
                        const double wy = -10.0 + 5.0 * sy + v + 0.5;
                        const int px = static_cast<int>(std::lround(kp.x + s * (wx * cos_t - wy * sin_t)));
                        const int py = static_cast<int>(std::lround(kp.y + s * (wx * sin_t + wy * cos_t)));
                        const double weight = std::exp(-(wx * wx + wy * wy) / (2.0 * 3.3 * 3.3));
                        const double rx = haar_x(ii, px, py, haar);
                        const double ry = haar_y(ii, px, py, haar);
                        // responses rotated into the keypoint frame
                        const double fdx = weight * (rx * cos_t + ry * sin_t);
                        const double fdy = weight * (-rx * sin_t + ry * cos_t);
                        sum_dx += fdx;
                        sum_dy += fdy;
                        sum_adx += std::abs(fdx);
                        sum_ady += std::abs(fdy);
                    }
                }
                const int base = (sy * 4 + sx) * 4;
                values[base] = static_cast<float>(sum_dx);
                values[base + 1] = static_cast<float>(sum_dy);
                values[base + 2] = static_cast<float>(sum_adx);
                values[base + 3] = static_cast<float>(sum_ady);
            }
        }

        double norm2 = 0.0;
        for (float f : values)
            norm2 += static_cast<double>(f) * f;
        if (norm2 > 0.0) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (float& f : values)
                f = static_cast<float>(f * inv);
        }

        Keypoint kept = kp;
        kept.orientation = orientation;
        result.kept.push_back(kept);
        result.descriptors.push_back(Descriptor::real_valued(std::move(values)));
    }
    return result;
}

} // namespace featbench
