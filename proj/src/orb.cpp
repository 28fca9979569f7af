#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "featbench/detect.hpp"
#include "featbench/pyramid.hpp"

namespace featbench {

void DetectorParams::validate() const {
    if (fast_threshold <= 0 || brisk.fast_threshold <= 0)
        throw std::invalid_argument("DetectorParams: FAST thresholds must be positive");
    if (fast_arc < 9 || fast_arc > 12)
        throw std::invalid_argument("DetectorParams: fast_arc must be in [9, 12], got " + std::to_string(fast_arc));
    if (sift.scales_per_octave <= 0 || sift.base_sigma <= 0.0 || sift.contrast_thresh <= 0.0 || sift.edge_ratio <= 0.0)
        throw std::invalid_argument("DetectorParams: SIFT parameters must be positive");
    if (sift.octaves < 0)
        throw std::invalid_argument("DetectorParams: SIFT octave count cannot be negative");
    if (surf.octaves <= 0 || surf.octaves > 4 || surf.hessian_thresh <= 0.0)
        throw std::invalid_argument("DetectorParams: SURF needs 1-4 octaves and a positive threshold");
    if (orb.n_features <= 0 || orb.levels <= 0 || orb.scale_factor <= 1.0)
        throw std::invalid_argument("DetectorParams: ORB needs positive feature/level counts and scale_factor > 1");
    if (brisk.octaves <= 0)
        throw std::invalid_argument("DetectorParams: BRISK octave count must be positive");
}

float intensity_centroid_angle(const Image& img, float x, float y, int radius) {
    const int cx = static_cast<int>(std::lround(x));
    const int cy = static_cast<int>(std::lround(y));
    const double r2 = (radius + 0.5) * (radius + 0.5);
    double m10 = 0.0, m01 = 0.0;
    for (int v = -radius; v <= radius; ++v) {
        const int umax = static_cast<int>(std::floor(std::sqrt(r2 - static_cast<double>(v) * v)));
        for (int u = -umax; u <= umax; ++u) {
            const double intensity = img.clamped_at(cx + u, cy + v);
            m10 += u * intensity;
            m01 += v * intensity;
        }
    }
    if (m10 == 0.0 && m01 == 0.0)
        return 0.0f;
    double angle = std::atan2(m01, m10);
    if (angle < 0.0)
        angle += 2.0 * std::numbers::pi;
    if (angle >= 2.0 * std::numbers::pi)
        angle = 0.0;
    return static_cast<float>(angle);
}

namespace {

// Harris corner measure over a 7x7 block of Sobel gradients, k = 0.04.
double harris_response(const Image& img, int x, int y) {
    double a = 0.0, b = 0.0, c = 0.0;
    for (int v = -3; v <= 3; ++v) {
        for (int u = -3; u <= 3; ++u) {
            const int px = x + u;
            const int py = y + v;
            const double dx = (img.at(px + 1, py - 1) + 2.0 * img.at(px + 1, py) + img.at(px + 1, py + 1)) -
                              (img.at(px - 1, py - 1) + 2.0 * img.at(px - 1, py) + img.at(px - 1, py + 1));
            const double dy = (img.at(px - 1, py + 1) + 2.0 * img.at(px, py + 1) + img.at(px + 1, py + 1)) -
                              (img.at(px - 1, py - 1) + 2.0 * img.at(px, py - 1) + img.at(px + 1, py - 1));
            a += dx * dx;
            b += dy * dy;
            c += dx * dy;
        }
    }
    const double scale = 1.0 / (4.0 * 7 * 7 * 255.0);
    a *= scale * scale;
    b *= scale * scale;
    c *= scale * scale;
    return (a * b - c * c) - 0.04 * (a + b) * (a + b);
}

struct Candidate {
    double harris;
    int octave;
    int lx, ly;
    float score;
    float angle;
};

constexpr int kEdgeMargin = 16;

} // namespace

KeypointList orb_detect(const Image& img, const DetectorParams& params) {
    params.validate();
    const Pyramid pyramid = build_pyramid(img, params.orb.levels, params.orb.scale_factor);

    std::vector<Candidate> candidates;
    for (std::size_t level = 0; level < pyramid.levels.size(); ++level) {
        const Image& li = pyramid.levels[level].image;
        const KeypointList corners = fast_detect(li, params.fast_threshold, params.fast_arc, true);
        for (const Keypoint& kp : corners) {
            const int x = static_cast<int>(kp.x);
            const int y = static_cast<int>(kp.y);
            if (x < kEdgeMargin || y < kEdgeMargin || x >= li.width() - kEdgeMargin || y >= li.height() - kEdgeMargin)
                continue;
            candidates.push_back({harris_response(li, x, y), static_cast<int>(level), x, y, kp.response,
                                  intensity_centroid_angle(li, kp.x, kp.y, 15)});
        }
    }

    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.harris != b.harris) return a.harris > b.harris;
        if (a.octave != b.octave) return a.octave < b.octave;
        if (a.ly != b.ly) return a.ly < b.ly;
        return a.lx < b.lx;
    });
    if (candidates.size() > static_cast<std::size_t>(params.orb.n_features))
        candidates.resize(static_cast<std::size_t>(params.orb.n_features));

    KeypointList keypoints;
    keypoints.reserve(candidates.size());
    for (const Candidate& c : candidates) {
        const Image& li = pyramid.levels[c.octave].image;
        const double fx = static_cast<double>(img.width()) / li.width();
        const double fy = static_cast<double>(img.height()) / li.height();
        const float bx = static_cast<float>(std::clamp((c.lx + 0.5) * fx - 0.5, 0.0, img.width() - 1.0));
        const float by = static_cast<float>(std::clamp((c.ly + 0.5) * fy - 0.5, 0.0, img.height() - 1.0));
        keypoints.push_back({bx, by, static_cast<float>(31.0 * fx), c.angle, c.score, c.octave});
    }
    return keypoints;
}

} // namespace featbench
