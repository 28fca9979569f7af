#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "featbench/detect.hpp"
#include "featbench/gaussian.hpp"
#include "featbench/surf_internal.hpp"

namespace featbench {

namespace {

// Inclusive-rectangle helper matching the (row, col, rows, cols) box idiom.
inline double box(const IntegralImage& ii, int row, int col, int rows, int cols) {
    return static_cast<double>(ii.box_sum_clipped(col, row, col + cols - 1, row + rows - 1));
}

constexpr int kSizesPerOctave = 4;

int filter_size(int octave, int index) {
    const int start = 3 * (2 << octave) + 3; // 9, 15, 27, 51
    return start + index * (6 << octave);
}

} // namespace

SurfHessian surf_hessian_at(const IntegralImage& ii, int x, int y, int size) {
    const int l = size / 3;
    const int b = (size - 1) / 2;
    const double inverse_area = 1.0 / (static_cast<double>(size) * size);

    SurfHessian h;
    h.dxx = box(ii, y - l + 1, x - b, 2 * l - 1, size) - 3.0 * box(ii, y - l + 1, x - l / 2, 2 * l - 1, l);
    h.dyy = box(ii, y - b, x - l + 1, size, 2 * l - 1) - 3.0 * box(ii, y - l / 2, x - l + 1, l, 2 * l - 1);
    h.dxy = box(ii, y - l, x + 1, l, l) + box(ii, y + 1, x - l, l, l) -
            box(ii, y - l, x - l, l, l) - box(ii, y + 1, x + 1, l, l);
    h.dxx *= inverse_area;
    h.dyy *= inverse_area;
    h.dxy *= inverse_area;
    return h;
}

double haar_x(const IntegralImage& ii, int x, int y, int size) {
    const int half = size / 2;
    return box(ii, y - half, x, size, half) - box(ii, y - half, x - half, size, half);
}

double haar_y(const IntegralImage& ii, int x, int y, int size) {
    const int half = size / 2;
    return box(ii, y, x - half, half, size) - box(ii, y - half, x - half, half, size);
}

float surf_orientation(const IntegralImage& ii, float x, float y, float s) {
    const int haar = 4 * std::max(1, static_cast<int>(std::lround(s)));
    struct Sample {
        double angle, rx, ry;
    };
    std::vector<Sample> samples;
    for (int j = -6; j <= 6; ++j) {
        for (int i = -6; i <= 6; ++i) {
            if (i * i + j * j >= 36)
                continue;
            const int px = static_cast<int>(std::lround(x + i * s));
            const int py = static_cast<int>(std::lround(y + j * s));
            const double weight = std::exp(-(static_cast<double>(i) * i + static_cast<double>(j) * j) / (2.0 * 2.5 * 2.5));
            const double rx = weight * haar_x(ii, px, py, haar);
            const double ry = weight * haar_y(ii, px, py, haar);
            if (rx == 0.0 && ry == 0.0)
                continue;
            samples.push_back({std::atan2(ry, rx), rx, ry});
        }
    }
    if (samples.empty())
        return 0.0f;

    double best_len = -1.0, best_x = 0.0, best_y = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (int k = 0; k < 42; ++k) {
        const double window_start = k * 0.15;
        double sum_x = 0.0, sum_y = 0.0;
        for (const Sample& smp : samples) {
            const double d = std::fmod(smp.angle - window_start + 2.0 * two_pi, two_pi);
            if (d < std::numbers::pi / 3.0) {
                sum_x += smp.rx;
                sum_y += smp.ry;
            }
        }
        const double len = sum_x * sum_x + sum_y * sum_y;
        if (len > best_len) {
            best_len = len;
            best_x = sum_x;
            best_y = sum_y;
        }
    }
    if (best_x == 0.0 && best_y == 0.0)
        return 0.0f;
    double angle = std::atan2(best_y, best_x);
    if (angle < 0.0)
        angle += two_pi;
    if (angle >= two_pi)
        angle = 0.0;
    return static_cast<float>(angle);
}

namespace {

struct ResponseMap {
    int step = 1;
    int grid_w = 0;
    int grid_h = 0;
    std::vector<float> values;

    float at(int gx, int gy) const { return values[static_cast<std::size_t>(gy) * grid_w + gx]; }
};

ResponseMap build_response_map(const IntegralImage& ii, int size, int step) {
    ResponseMap map;
    map.step = step;
    map.grid_w = (ii.width() + step - 1) / step;
    map.grid_h = (ii.height() + step - 1) / step;
    map.values.assign(static_cast<std::size_t>(map.grid_w) * map.grid_h, 0.0f);

    const int margin = size / 2 + 1;
    for (int gy = 0; gy < map.grid_h; ++gy) {
        const int y = gy * step;
        if (y < margin || y >= ii.height() - margin)
            continue;
        for (int gx = 0; gx < map.grid_w; ++gx) {
            const int x = gx * step;
            if (x < margin || x >= ii.width() - margin)
                continue;
            const SurfHessian h = surf_hessian_at(ii, x, y, size);
            map.values[static_cast<std::size_t>(gy) * map.grid_w + gx] =
                static_cast<float>(h.dxx * h.dyy - 0.81 * h.dxy * h.dxy);
        }
    }
    return map;
}

bool interpolate(const ResponseMap& below, const ResponseMap& mid, const ResponseMap& above,
                 int gx, int gy, double& dx, double& dy, double& ds, double& value) {
    const double v = mid.at(gx, gy);
    const double gx_ = 0.5 * (mid.at(gx + 1, gy) - mid.at(gx - 1, gy));
    const double gy_ = 0.5 * (mid.at(gx, gy + 1) - mid.at(gx, gy - 1));
    const double gs_ = 0.5 * (above.at(gx, gy) - below.at(gx, gy));
    const double dxx = mid.at(gx + 1, gy) + mid.at(gx - 1, gy) - 2.0 * v;
    const double dyy = mid.at(gx, gy + 1) + mid.at(gx, gy - 1) - 2.0 * v;
    const double dss = above.at(gx, gy) + below.at(gx, gy) - 2.0 * v;
    const double dxy = 0.25 * (mid.at(gx + 1, gy + 1) - mid.at(gx - 1, gy + 1) - mid.at(gx + 1, gy - 1) + mid.at(gx - 1, gy - 1));
    const double dxs = 0.25 * (above.at(gx + 1, gy) - above.at(gx - 1, gy) - below.at(gx + 1, gy) + below.at(gx - 1, gy));
    const double dys = 0.25 * (above.at(gx, gy + 1) - above.at(gx, gy - 1) - below.at(gx, gy + 1) + below.at(gx, gy - 1));

    const double det = dxx * (dyy * dss - dys * dys) - dxy * (dxy * dss - dys * dxs) + dxs * (dxy * dys - dyy * dxs);
    if (std::abs(det) < 1e-30)
        return false;
    dx = (-gx_ * (dyy * dss - dys * dys) - dxy * (-gy_ * dss - dys * -gs_) + dxs * (-gy_ * dys - dyy * -gs_)) / det;
    dy = (dxx * (-gy_ * dss - dys * -gs_) - -gx_ * (dxy * dss - dys * dxs) + dxs * (dxy * -gs_ - -gy_ * dxs)) / det;
    ds = (dxx * (dyy * -gs_ - -gy_ * dys) - dxy * (dxy * -gs_ - -gy_ * dxs) + -gx_ * (dxy * dys - dyy * dxs)) / det;
    if (std::abs(dx) > 0.5 || std::abs(dy) > 0.5 || std::abs(ds) > 0.5)
        return false;
    value = v + 0.5 * (gx_ * dx + gy_ * dy + gs_ * ds);
    return true;
}

} // namespace

KeypointList surf_detect(const Image& img, const DetectorParams& params) {
    params.validate();
    if (img.width() < 64 || img.height() < 64)
        throw std::invalid_argument("surf_detect: image must be at least 64x64, got " + std::to_string(img.width()) + "x" + std::to_string(img.height()));

    const IntegralImage ii(img);
    KeypointList keypoints;

    for (int octave = 0; octave < params.surf.octaves; ++octave) {
        const int step = 1 << octave;
        std::vector<ResponseMap> maps;
        maps.reserve(kSizesPerOctave);
        for (int t = 0; t < kSizesPerOctave; ++t)
            maps.push_back(build_response_map(ii, filter_size(octave, t), step));

        for (int t = 1; t <= 2; ++t) {
            const ResponseMap& mid = maps[t];
            for (int gy = 1; gy < mid.grid_h - 1; ++gy) {
                for (int gx = 1; gx < mid.grid_w - 1; ++gx) {
                    const float v = mid.at(gx, gy);
                    if (v < params.surf.hessian_thresh)
                        continue;
                    bool is_max = true;
                    for (int dt = t - 1; dt <= t + 1 && is_max; ++dt) {
                        for (int ny = gy - 1; ny <= gy + 1 && is_max; ++ny) {
                            for (int nx = gx - 1; nx <= gx + 1; ++nx) {
                                if (dt == t && nx == gx && ny == gy)
                                    continue;
                                if (maps[dt].at(nx, ny) >= v) {
                                    is_max = false;
                                    break;
                                }
                            }
                        }
                    }
                    if (!is_max)
                        continue;

                    double dx, dy, ds, value;
                    if (!interpolate(maps[t - 1], mid, maps[t + 1], gx, gy, dx, dy, ds, value))
                        continue;

                    const double px = std::clamp((gx + dx) * step, 0.0, img.width() - 1.0);
                    const double py = std::clamp((gy + dy) * step, 0.0, img.height() - 1.0);
                    const double size = filter_size(octave, t) + ds * (6 << octave);
                    const float scale = static_cast<float>(1.2 * size / 9.0);
                    const float orientation = surf_orientation(ii, static_cast<float>(px), static_cast<float>(py), scale);
                    keypoints.push_back({static_cast<float>(px), static_cast<float>(py), scale, orientation,
                                         static_cast<float>(std::max(value, 0.0)), octave});
                }
            }
        }
    }
    return keypoints;
}

} // namespace featbench
