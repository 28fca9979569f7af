#include <cmath>
#include <numbers>

#include "featbench/describe.hpp"

namespace featbench {

namespace {

// Ring layout in pattern units: paper-space radii {0, 2.9, 4.9, 7.4, 10.8}
// brought to the unit scale where the short/long distance thresholds are
// 9.75 and 13.67; smoothing grows with ring radius and point spacing.
constexpr double kUnitFactor = 0.85 * 13.67 / 8.2;
constexpr double kShortLimit = 9.75;
constexpr double kLongLimit = 13.67;
constexpr double kRingRadius[5] = {0.0, 2.9, 4.9, 7.4, 10.8};
constexpr int kRingCount[5] = {1, 10, 14, 15, 20};

BriskPattern make_brisk_pattern() {
    BriskPattern pattern;
    for (int ring = 0; ring < 5; ++ring) {
        const double radius = kRingRadius[ring] * kUnitFactor;
        const int n = kRingCount[ring];
        const double sigma = ring == 0 ? 1.3 * kUnitFactor * 0.5
                                       : 1.3 * radius * std::sin(std::numbers::pi / n);
        for (int i = 0; i < n; ++i) {
            const double alpha = 2.0 * std::numbers::pi * i / n;
            pattern.points.push_back({radius * std::cos(alpha), radius * std::sin(alpha), sigma});
        }
    }
    const int total = static_cast<int>(pattern.points.size());
    for (int i = 1; i < total; ++i) {
        for (int j = 0; j < i; ++j) {
            const double dx = pattern.points[i].x - pattern.points[j].x;
            const double dy = pattern.points[i].y - pattern.points[j].y;
            const double dist = std::sqrt(dx * dx + dy * dy);
            if (dist < kShortLimit)
                pattern.short_pairs.push_back({i, j});
            else if (dist > kLongLimit)
                pattern.long_pairs.push_back({i, j});
        }
    }
    return pattern;
}

int box_halfside(double sigma) {
    return std::max(1, static_cast<int>(std::lround(sigma)));
}

// Integer box-mean sample; integer quantization keeps bit comparisons stable
// on structurally equal intensities.
int smoothed_sample(const IntegralImage& ii, double x, double y, double sigma) {
    const int cx = static_cast<int>(std::lround(x));
    const int cy = static_cast<int>(std::lround(y));
    const int h = box_halfside(sigma);
    const std::uint64_t area = static_cast<std::uint64_t>(2 * h + 1) * (2 * h + 1);
    const std::uint64_t sum = ii.box_sum(cx - h, cy - h, cx + h, cy + h);
    return static_cast<int>((sum + area / 2) / area);
}

} // namespace

const BriskPattern& brisk_pattern() {
    static const BriskPattern pattern = make_brisk_pattern();
    return pattern;
}

DescribeResult brisk_describe(const Image& img, const KeypointList& kps) {
    const BriskPattern& pattern = brisk_pattern();
    const IntegralImage ii(img);
    const int n_points = static_cast<int>(pattern.points.size());

    double max_radius = 0.0, max_sigma = 0.0;
    for (const auto& p : pattern.points) {
        max_radius = std::max(max_radius, std::hypot(p.x, p.y));
        max_sigma = std::max(max_sigma, p.sigma);
    }

    DescribeResult result;
    std::vector<int> samples(n_points);
    for (const Keypoint& kp : kps) {
        const double u = kp.scale / 7.0;
        const int bound = static_cast<int>(std::ceil(max_radius * u)) + box_halfside(max_sigma * u) + 2;
        const int cx = static_cast<int>(std::lround(kp.x));
        const int cy = static_cast<int>(std::lround(kp.y));
        if (cx < bound || cy < bound || cx >= img.width() - bound || cy >= img.height() - bound)
            continue;

        const auto sample_all = [&](double angle) {
            const double c = std::cos(angle);
            const double s = std::sin(angle);
            for (int i = 0; i < n_points; ++i) {
                const auto& p = pattern.points[i];
                samples[i] = smoothed_sample(ii, kp.x + u * (p.x * c - p.y * s),
                                             kp.y + u * (p.x * s + p.y * c), p.sigma * u);
            }
        };

        sample_all(0.0);
        double gx = 0.0, gy = 0.0;
        for (const auto& [i, j] : pattern.long_pairs) {
            const double dx = pattern.points[i].x - pattern.points[j].x;
            const double dy = pattern.points[i].y - pattern.points[j].y;
            const double dist2 = dx * dx + dy * dy;
            const double delta = samples[i] - samples[j];
            gx += dx * delta / dist2;
            gy += dy * delta / dist2;
        }
        double theta = 0.0;
        if (gx != 0.0 || gy != 0.0) {
            theta = std::atan2(gy, gx);
            if (theta < 0.0)
                theta += 2.0 * std::numbers::pi;
            if (theta >= 2.0 * std::numbers::pi)
                theta = 0.0;
        }

        sample_all(theta);
        Descriptor desc = Descriptor::binary(512);
        for (std::size_t b = 0; b < pattern.short_pairs.size(); ++b) {
            const auto& [i, j] = pattern.short_pairs[b];
            if (samples[i] > samples[j])
                desc.set_bit(static_cast<int>(b));
        }

        Keypoint kept = kp;
        if (kept.orientation == 0.0f)
            kept.orientation = static_cast<float>(theta);
        result.kept.push_back(kept);
        result.descriptors.push_back(std::move(desc));
    }
    return result;
}

} // namespace featbench
