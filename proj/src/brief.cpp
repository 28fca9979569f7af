#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>

#include "featbench/describe.hpp"
#include "featbench/detect.hpp"
#include "featbench/gaussian.hpp"

namespace featbench {

namespace {

constexpr int kHalfPatch = 15;
constexpr double kPatternSigma = 31.0 / 5.0;
constexpr double kPresmoothSigma = 2.0;
constexpr float kRawFastScale = 7.0f;

// Standard-normal pair via the Box-Muller transform so the pattern depends
// only on the mt19937 stream, not on library distribution internals.
std::pair<double, double> normal_pair(std::mt19937& rng) {
    const double u1 = (static_cast<double>(rng()) + 0.5) / 4294967296.0;
    const double u2 = (static_cast<double>(rng()) + 0.5) / 4294967296.0;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2)};
}

BriefPattern make_pattern(std::uint32_t seed) {
    BriefPattern pattern;
    pattern.seed = seed;
    std::mt19937 rng(seed);
    for (auto& pair : pattern.pairs) {
        for (;;) {
            const auto [a, b] = normal_pair(rng);
            const auto [c, d] = normal_pair(rng);
            const int x1 = static_cast<int>(std::lround(a * kPatternSigma));
            const int y1 = static_cast<int>(std::lround(b * kPatternSigma));
            const int x2 = static_cast<int>(std::lround(c * kPatternSigma));
            const int y2 = static_cast<int>(std::lround(d * kPatternSigma));
            if (std::abs(x1) > kHalfPatch || std::abs(y1) > kHalfPatch ||
                std::abs(x2) > kHalfPatch || std::abs(y2) > kHalfPatch)
                continue;
            if (x1 == x2 && y1 == y2)
                continue;
            pair = {x1, y1, x2, y2};
            break;
        }
    }
    return pattern;
}

} // namespace

const BriefPattern& brief_pattern(std::uint32_t seed) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<BriefPattern>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& entry = cache[seed];
    if (!entry)
        entry = std::make_unique<BriefPattern>(make_pattern(seed));
    return *entry;
}

DescribeResult brief_describe(const Image& img, const KeypointList& kps, const BriefPattern& pattern) {
    const FloatImage smoothed = gaussian_blur(FloatImage::from(img), kPresmoothSigma);

    DescribeResult result;
    for (const Keypoint& kp : kps) {
        const int cx = static_cast<int>(std::lround(kp.x));
        const int cy = static_cast<int>(std::lround(kp.y));
        if (cx < kHalfPatch || cy < kHalfPatch || cx >= img.width() - kHalfPatch || cy >= img.height() - kHalfPatch)
            continue;
        Descriptor desc = Descriptor::binary(256);
        for (int i = 0; i < 256; ++i) {
            const auto& [x1, y1, x2, y2] = pattern.pairs[i];
            if (smoothed.at(cx + x1, cy + y1) < smoothed.at(cx + x2, cy + y2))
                desc.set_bit(i);
        }
        result.kept.push_back(kp);
        result.descriptors.push_back(std::move(desc));
    }
    return result;
}

DescribeResult orb_describe(const Image& img, const KeypointList& kps, const BriefPattern& pattern) {
    const FloatImage smoothed = gaussian_blur(FloatImage::from(img), kPresmoothSigma);
    constexpr double kAngleStep = 2.0 * std::numbers::pi / 30.0;

    DescribeResult result;
    for (const Keypoint& kp : kps) {
        float orientation = kp.orientation;
        if (orientation == 0.0f && kp.scale == kRawFastScale)
            orientation = intensity_centroid_angle(img, kp.x, kp.y, kHalfPatch);

        const int quantized = static_cast<int>(std::lround(orientation / kAngleStep)) % 30;
        const double angle = quantized * kAngleStep;
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        const double u = kp.scale / 31.0;

        const int cx = static_cast<int>(std::lround(kp.x));
        const int cy = static_cast<int>(std::lround(kp.y));
        const int bound = static_cast<int>(std::ceil(kHalfPatch * u * std::numbers::sqrt2)) + 1;
        if (cx < bound || cy < bound || cx >= img.width() - bound || cy >= img.height() - bound)
            continue;

        const auto sample = [&](int px, int py) {
            const int rx = static_cast<int>(std::lround(u * (px * c - py * s)));
            const int ry = static_cast<int>(std::lround(u * (px * s + py * c)));
            return smoothed.at(cx + rx, cy + ry);
        };

        Descriptor desc = Descriptor::binary(256);
        for (int i = 0; i < 256; ++i) {
            const auto& [x1, y1, x2, y2] = pattern.pairs[i];
            if (sample(x1, y1) < sample(x2, y2))
                desc.set_bit(i);
        }
        Keypoint kept = kp;
        kept.orientation = orientation;
        result.kept.push_back(kept);
        result.descriptors.push_back(std::move(desc));
    }
    return result;
}

} // namespace featbench
