#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "featbench/describe.hpp"
#include "featbench/gaussian.hpp"

namespace featbench {

namespace {

constexpr int kGrid = 4;
constexpr int kAngleBins = 8;
constexpr double kBaseSigma = 1.6;
constexpr double kAssumedBlur = 0.5;
// Windows scale with the keypoint, but footprint-style scales from other
// detectors (e.g. a 31-pixel patch size) would push the window past any
// 555x480 frame, so the effective sigma is capped.
constexpr double kMaxSigma = 10.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

// Dominant gradient-orientation peak around (x, y); the backfill for
// keypoints that arrive without an orientation.
float dominant_orientation(const FloatImage& plane, float x, float y, double sigma) {
    constexpr int kBins = 36;
    const int cx = static_cast<int>(std::lround(x));
    const int cy = static_cast<int>(std::lround(y));
    const int radius = std::max(1, static_cast<int>(std::lround(4.5 * sigma)));
    const double denom = 2.0 * (1.5 * sigma) * (1.5 * sigma);

    std::array<double, kBins> hist{};
    for (int v = -radius; v <= radius; ++v) {
        for (int u = -radius; u <= radius; ++u) {
            const int px = cx + u;
            const int py = cy + v;
            if (px < 1 || px >= plane.width - 1 || py < 1 || py >= plane.height - 1)
                continue;
            const double dx = plane.at(px + 1, py) - plane.at(px - 1, py);
            const double dy = plane.at(px, py + 1) - plane.at(px, py - 1);
            const double mag = std::sqrt(dx * dx + dy * dy);
            if (mag == 0.0)
                continue;
            int bin = static_cast<int>(wrap_angle(std::atan2(dy, dx)) / kTwoPi * kBins);
            if (bin >= kBins) bin = 0;
            hist[bin] += mag * std::exp(-(static_cast<double>(u) * u + static_cast<double>(v) * v) / denom);
        }
    }

    std::array<double, kBins> smooth;
    for (int i = 0; i < kBins; ++i) {
        const auto wrap = [](int b) { return (b + kBins) % kBins; };
        smooth[i] = (hist[wrap(i - 2)] + hist[wrap(i + 2)]) / 16.0 +
                    4.0 * (hist[wrap(i - 1)] + hist[wrap(i + 1)]) / 16.0 + 6.0 * hist[i] / 16.0;
    }
    int best = 0;
    for (int i = 1; i < kBins; ++i)
        if (smooth[i] > smooth[best])
            best = i;
    const double left = smooth[(best + kBins - 1) % kBins];
    const double right = smooth[(best + 1) % kBins];
    if (smooth[best] <= left || smooth[best] <= right)
        return 0.0f;
    const double interp = best + 0.5 * (left - right) / (left - 2.0 * smooth[best] + right);
    return static_cast<float>(wrap_angle((interp + 0.5) * kTwoPi / kBins));
}

// Normalize, clamp at 0.2, and repeat until the normalized vector respects
// the clamp; degenerate few-component vectors exit after the iteration cap.
void normalize_and_clamp(std::vector<float>& v) {
    for (int round = 0; round < 32; ++round) {
        double norm2 = 0.0;
        for (float f : v)
            norm2 += static_cast<double>(f) * f;
        if (norm2 == 0.0)
            return;
        const double inv = 1.0 / std::sqrt(norm2);
        float max_component = 0.0f;
        for (float& f : v) {
            f = static_cast<float>(f * inv);
            max_component = std::max(max_component, f);
        }
        if (max_component <= 0.2f + 1e-7f)
            return;
        for (float& f : v)
            f = std::min(f, 0.2f);
    }
}

} // namespace

DescribeResult sift_describe(const Image& img, const KeypointList& kps) {
    FloatImage plane(img.width(), img.height());
    for (std::size_t i = 0; i < plane.data.size(); ++i)
        plane.data[i] = static_cast<float>(img.pixels()[i]) / 255.0f;
    plane = gaussian_blur(plane, std::sqrt(kBaseSigma * kBaseSigma - kAssumedBlur * kAssumedBlur));

    DescribeResult result;
    for (const Keypoint& kp : kps) {
        const double sigma = std::clamp(static_cast<double>(kp.scale), 1.0, kMaxSigma);
        float orientation = kp.orientation;
        if (orientation == 0.0f)
            orientation = dominant_orientation(plane, kp.x, kp.y, sigma);

        const double hist_width = 3.0 * sigma;
        const int radius = static_cast<int>(std::lround(hist_width * std::numbers::sqrt2 * (kGrid + 1) * 0.5));
        const int cx = static_cast<int>(std::lround(kp.x));
        const int cy = static_cast<int>(std::lround(kp.y));
        if (cx < radius + 1 || cy < radius + 1 || cx >= img.width() - radius - 1 || cy >= img.height() - radius - 1)
            continue;

        const double cos_t = std::cos(orientation);
        const double sin_t = std::sin(orientation);
        const double weight_denom = 2.0 * (0.5 * kGrid * hist_width) * (0.5 * kGrid * hist_width);

        std::array<double, kGrid * kGrid * kAngleBins> hist{};
        for (int v = -radius; v <= radius; ++v) {
            for (int u = -radius; u <= radius; ++u) {
                // descriptor-frame coordinates of this sample
                const double fx = u * cos_t + v * sin_t;
                const double fy = -u * sin_t + v * cos_t;
                const double cbin = fx / hist_width + kGrid / 2.0 - 0.5;
                const double rbin = fy / hist_width + kGrid / 2.0 - 0.5;
                if (cbin <= -1.0 || cbin >= kGrid || rbin <= -1.0 || rbin >= kGrid)
                    continue;

                const int px = cx + u;
                const int py = cy + v;
                const double dx = plane.at(px + 1, py) - plane.at(px - 1, py);
                const double dy = plane.at(px, py + 1) - plane.at(px, py - 1);
                const double mag = std::sqrt(dx * dx + dy * dy);
                if (mag == 0.0)
                    continue;
                const double weight = std::exp(-(fx * fx + fy * fy) / weight_denom);
                const double obin = wrap_angle(std::atan2(dy, dx) - orientation) / kTwoPi * kAngleBins;

                const int r0 = static_cast<int>(std::floor(rbin));
                const int c0 = static_cast<int>(std::floor(cbin));
                const int o0 = static_cast<int>(std::floor(obin)) % kAngleBins;
                const double rf = rbin - r0;
                const double cf = cbin - c0;
                const double of = obin - std::floor(obin);

                for (int dr = 0; dr <= 1; ++dr) {
                    const int rr = r0 + dr;
                    if (rr < 0 || rr >= kGrid)
                        continue;
                    for (int dc = 0; dc <= 1; ++dc) {
                        const int cc = c0 + dc;
                        if (cc < 0 || cc >= kGrid)
                            continue;
                        for (int dot = 0; dot <= 1; ++dot) {
                            const int oo = (o0 + dot) % kAngleBins;
                            const double share = (dr ? rf : 1.0 - rf) * (dc ? cf : 1.0 - cf) * (dot ? of : 1.0 - of);
                            hist[(rr * kGrid + cc) * kAngleBins + oo] += mag * weight * share;
                        }
                    }
                }
            }
        }

        std::vector<float> values(hist.size());
        for (std::size_t i = 0; i < hist.size(); ++i)
            values[i] = static_cast<float>(hist[i]);
        normalize_and_clamp(values);

        Keypoint kept = kp;
        kept.orientation = orientation;
        result.kept.push_back(kept);
        result.descriptors.push_back(Descriptor::real_valued(std::move(values)));
    }
    return result;
}

} // namespace featbench
