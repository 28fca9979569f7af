#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "featbench/detect.hpp"
#include "featbench/gaussian.hpp"
#include "featbench/pyramid.hpp"

namespace featbench {

namespace {

struct Layer {
    Image image;
    double factor;     // downsampling factor relative to the base image
    FastScoreMap scores;
    KeypointList corners;
};

// Max corner score in the 3x3 neighborhood around the layer position nearest
// to the given base-image point.
int neighborhood_max(const Layer& layer, double bx, double by) {
    const int cx = static_cast<int>(std::lround((bx + 0.5) / layer.factor - 0.5));
    const int cy = static_cast<int>(std::lround((by + 0.5) / layer.factor - 0.5));
    int best = 0;
    for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
            const int x = std::clamp(cx + dx, 0, layer.scores.width - 1);
            const int y = std::clamp(cy + dy, 0, layer.scores.height - 1);
            best = std::max(best, static_cast<int>(layer.scores.at(x, y)));
        }
    }
    return best;
}

// Offset of the quadratic-surface vertex fitted to a 3x3 score patch;
// falls back to the grid point on degenerate (flat or non-concave) patches.
void subpixel_offset(const FastScoreMap& scores, int x, int y, double& dx, double& dy) {
    dx = dy = 0.0;
    if (x < 1 || y < 1 || x >= scores.width - 1 || y >= scores.height - 1)
        return;
    const double gx = 0.5 * (scores.at(x + 1, y) - scores.at(x - 1, y));
    const double gy = 0.5 * (scores.at(x, y + 1) - scores.at(x, y - 1));
    const double v = scores.at(x, y);
    const double dxx = scores.at(x + 1, y) + scores.at(x - 1, y) - 2.0 * v;
    const double dyy = scores.at(x, y + 1) + scores.at(x, y - 1) - 2.0 * v;
    const double dxy = 0.25 * (scores.at(x + 1, y + 1) - scores.at(x - 1, y + 1) -
                               scores.at(x + 1, y - 1) + scores.at(x - 1, y - 1));
    const double det = dxx * dyy - dxy * dxy;
    if (std::abs(det) < 1e-12)
        return;
    const double ox = (-gx * dyy + gy * dxy) / det;
    const double oy = (gx * dxy - gy * dxx) / det;
    if (std::abs(ox) <= 1.0 && std::abs(oy) <= 1.0) {
        dx = ox;
        dy = oy;
    }
}

// Vertex of the parabola through three (position, score) samples, clamped to
// the outer sample positions; returns x2 when the fit is not concave.
double parabola_vertex(double x1, double y1, double x2, double y2, double x3, double y3) {
    const double denom = (x1 - x2) * (x1 - x3) * (x2 - x3);
    const double a = (x3 * (y2 - y1) + x2 * (y1 - y3) + x1 * (y3 - y2)) / denom;
    if (a >= 0.0)
        return x2;
    const double b = (x3 * x3 * (y1 - y2) + x2 * x2 * (y3 - y1) + x1 * x1 * (y2 - y3)) / denom;
    return std::clamp(-b / (2.0 * a), x1, x3);
}

} // namespace

KeypointList brisk_detect(const Image& img, const DetectorParams& params) {
    params.validate();
    if (img.width() < 64 || img.height() < 64)
        throw std::invalid_argument("brisk_detect: image must be at least 64x64, got " + std::to_string(img.width()) + "x" + std::to_string(img.height()));

    const int octaves = params.brisk.octaves;
    const Pyramid full = build_pyramid(img, octaves, 2.0);
    const Pyramid intra = build_pyramid(resize_bilinear(img, img.width() * 2 / 3, img.height() * 2 / 3), octaves, 2.0);

    std::vector<Layer> layers;
    for (std::size_t i = 0; i < std::max(full.levels.size(), intra.levels.size()); ++i) {
        if (i < full.levels.size())
            layers.push_back({full.levels[i].image, static_cast<double>(img.width()) / full.levels[i].image.width(), {}, {}});
        if (i < intra.levels.size())
            layers.push_back({intra.levels[i].image, static_cast<double>(img.width()) / intra.levels[i].image.width(), {}, {}});
    }
    for (Layer& layer : layers) {
        layer.scores = fast_score_map(layer.image, params.brisk.fast_threshold, params.fast_arc);
        layer.corners = fast_detect(layer.image, params.brisk.fast_threshold, params.fast_arc, true);
    }

    KeypointList keypoints;
    for (std::size_t j = 0; j < layers.size(); ++j) {
        const Layer& layer = layers[j];
        const double fx = static_cast<double>(img.width()) / layer.image.width();
        const double fy = static_cast<double>(img.height()) / layer.image.height();
        const double u_mid = std::log2(layer.factor);

        for (const Keypoint& corner : layer.corners) {
            const int lx = static_cast<int>(corner.x);
            const int ly = static_cast<int>(corner.y);
            const int score = static_cast<int>(corner.response);
            const double bx = (lx + 0.5) * fx - 0.5;
            const double by = (ly + 0.5) * fy - 0.5;

            // A tie across layers keeps only the finest layer's point.
            int above = -1, below = -1;
            if (j + 1 < layers.size()) {
                above = neighborhood_max(layers[j + 1], bx, by);
                if (score < above)
                    continue;
            }
            if (j > 0) {
                below = neighborhood_max(layers[j - 1], bx, by);
                if (score <= below)
                    continue;
            }

            double dx, dy;
            subpixel_offset(layer.scores, lx, ly, dx, dy);

            double factor = layer.factor;
            if (above >= 0 && below >= 0) {
                const double u_below = std::log2(layers[j - 1].factor);
                const double u_above = std::log2(layers[j + 1].factor);
                factor = std::pow(2.0, parabola_vertex(u_below, below, u_mid, score, u_above, above));
            }

            const float x = static_cast<float>(std::clamp((lx + dx + 0.5) * fx - 0.5, 0.0, img.width() - 1.0));
            const float y = static_cast<float>(std::clamp((ly + dy + 0.5) * fy - 0.5, 0.0, img.height() - 1.0));
            keypoints.push_back({x, y, static_cast<float>(7.0 * factor), 0.0f,
                                 static_cast<float>(score), static_cast<int>(j)});
        }
    }
    return keypoints;
}

} // namespace featbench
