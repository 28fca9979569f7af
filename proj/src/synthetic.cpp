#include "featbench/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>

#include "featbench/errors.hpp"
#include "featbench/gaussian.hpp"
#include "featbench/image_io.hpp"

namespace featbench {
namespace {

namespace fs = std::filesystem;

/// Deterministic uniform draw in [0, 1). The explicit mapping (rather than a
/// std:: distribution) keeps generated datasets identical across toolchains.
double uniform(std::mt19937& rng) {
    return (double(rng()) + 0.5) / 4294967296.0;
}

int uniform_int(std::mt19937& rng, int lo, int hi) {
    return lo + int(uniform(rng) * double(hi - lo + 1));
}

/// Shape tone guaranteed to sit at least 32 levels away from the scene
/// background, so every shape boundary clears the default FAST threshold
/// even after blur and rotated resampling.
std::uint8_t contrast_tone(std::mt19937& rng, int bg) {
    const int delta = 32 + uniform_int(rng, 0, 95);
    const int sign = uniform(rng) < 0.5 ? -1 : 1;
    int v = bg + sign * delta;
    if (v < 8 || v > 247) {
        v = bg - sign * delta;
    }
    return std::uint8_t(std::clamp(v, 8, 247));
}

void fill_rect(Image& img, int x0, int y0, int w, int h, std::uint8_t value) {
    const int xa = std::max(0, x0), xb = std::min(img.width(), x0 + w);
    const int ya = std::max(0, y0), yb = std::min(img.height(), y0 + h);
    for (int y = ya; y < yb; ++y) {
        for (int x = xa; x < xb; ++x) {
            img.at(x, y) = value;
        }
    }
}

void fill_circle(Image& img, double cx, double cy, double r, std::uint8_t value) {
    const int ya = std::max(0, int(std::floor(cy - r)));
    const int yb = std::min(img.height() - 1, int(std::ceil(cy + r)));
    const int xa = std::max(0, int(std::floor(cx - r)));
    const int xb = std::min(img.width() - 1, int(std::ceil(cx + r)));
    for (int y = ya; y <= yb; ++y) {
        for (int x = xa; x <= xb; ++x) {
            const double dx = x - cx, dy = y - cy;
            if (dx * dx + dy * dy <= r * r) {
                img.at(x, y) = value;
            }
        }
    }
}

/// A thick line segment — the "glyph stroke" texture element.
void stroke(Image& img, double x0, double y0, double angle, double length, double thickness,
            std::uint8_t value) {
    const double step = 0.5;
    const double dx = std::cos(angle) * step, dy = std::sin(angle) * step;
    const int steps = int(length / step);
    double px = x0, py = y0;
    for (int i = 0; i <= steps; ++i) {
        fill_circle(img, px, py, thickness / 2.0, value);
        px += dx;
        py += dy;
    }
}

/// One textured scene: per-scene ground tone, rectangles (corners), discs
/// (blobs), strokes (oriented edges), mild pixel noise, and a light blur that
/// keeps the texture stable under the rotated resampling of the query crops.
/// Distinct ground tones give each scene its own histogram mode, so the
/// correlation prefilter can tell scenes apart.
Image render_scene(int side, int bg, std::mt19937& rng) {
    Image canvas(side, side, std::vector<std::uint8_t>(std::size_t(side) * side, std::uint8_t(bg)));

    const int n_rects = std::max(30, side * side / 4500);
    for (int i = 0; i < n_rects; ++i) {
        const int w = uniform_int(rng, 10, 90);
        const int h = uniform_int(rng, 10, 90);
        const int x = uniform_int(rng, -w / 2, side - w / 2);
        const int y = uniform_int(rng, -h / 2, side - h / 2);
        fill_rect(canvas, x, y, w, h, contrast_tone(rng, bg));
    }

    const int n_circles = std::max(16, side * side / 8000);
    for (int i = 0; i < n_circles; ++i) {
        const double cx = uniform(rng) * side;
        const double cy = uniform(rng) * side;
        const double r = 5.0 + uniform(rng) * 21.0;
        fill_circle(canvas, cx, cy, r, contrast_tone(rng, bg));
    }

    const int n_strokes = std::max(20, side * side / 5200);
    for (int i = 0; i < n_strokes; ++i) {
        const double x = uniform(rng) * side;
        const double y = uniform(rng) * side;
        const double angle = uniform(rng) * 2.0 * std::numbers::pi;
        const double length = 12.0 + uniform(rng) * 38.0;
        const double thickness = 2.0 + uniform(rng) * 3.0;
        stroke(canvas, x, y, angle, length, thickness, contrast_tone(rng, bg));
    }

    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const int noisy = canvas.at(x, y) + uniform_int(rng, -7, 7);
            canvas.at(x, y) = std::uint8_t(std::clamp(noisy, 0, 255));
        }
    }
    return gaussian_blur(canvas, 0.8);
}

std::uint8_t bilinear(const Image& img, double fx, double fy) {
    const int x0 = int(std::floor(fx)), y0 = int(std::floor(fy));
    const double ax = fx - x0, ay = fy - y0;
    const double p00 = img.clamped_at(x0, y0), p10 = img.clamped_at(x0 + 1, y0);
    const double p01 = img.clamped_at(x0, y0 + 1), p11 = img.clamped_at(x0 + 1, y0 + 1);
    const double v = (1 - ax) * (1 - ay) * p00 + ax * (1 - ay) * p10 + (1 - ax) * ay * p01 +
                     ax * ay * p11;
    return std::uint8_t(std::clamp<long>(std::lround(v), 0, 255));
}

/// A w x h view of the canvas rotated by `yaw_deg` about the view center.
/// The 0-degree view is an exact integer crop so the middle-height query is
/// bit-identical to its template.
Image extract_view(const Image& canvas, int x0, int y0, int w, int h, int yaw_deg) {
    Image out(w, h);
    if (yaw_deg == 0) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x < w; ++x) {
                out.at(x, y) = canvas.at(x0 + x, y0 + y);
            }
        }
        return out;
    }
    const double rad = yaw_deg * std::numbers::pi / 180.0;
    const double c = std::cos(rad), s = std::sin(rad);
    const double cx = x0 + (w - 1) / 2.0, cy = y0 + (h - 1) / 2.0;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double u = x - (w - 1) / 2.0;
            const double v = y - (h - 1) / 2.0;
            out.at(x, y) = bilinear(canvas, cx + u * c - v * s, cy + u * s + v * c);
        }
    }
    return out;
}

const char* yaw_tag(int yaw) {
    switch (yaw) {
        case -30: return "ym30";
        case -15: return "ym15";
        case 0: return "y0";
        case 15: return "yp15";
        case 30: return "yp30";
    }
    return "y?";
}

/// Stand-in physical coordinates: one meter between points in x, yaw drifts
/// the capture pose slightly in x and y, heights step z — so a location cube
/// over neighboring cells is non-degenerate on every axis.
std::array<double, 3> cell_position(int point, int height, int yaw) {
    return {point * 1.0 + yaw / 300.0, yaw / 600.0, 0.5 + 0.35 * height};
}

}  // namespace

SyntheticDataset generate_synthetic(const SyntheticConfig& config) {
    if (config.n_points < 1) {
        throw ConfigError("synthetic: n_points must be at least 1");
    }
    if (config.width < 64 || config.height < 64) {
        throw ConfigError("synthetic: image size must be at least 64x64");
    }
    if (config.output_dir.empty()) {
        throw ConfigError("synthetic: output_dir is required");
    }
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);

    const int w = config.width, h = config.height;
    const int diag = int(std::ceil(std::hypot(double(w), double(h)) / 2.0));
    const int shift = int(std::lround(h / 8.0));
    const int side = 2 * (diag + shift + 8);
    const int tx0 = (side - w) / 2, ty0 = (side - h) / 2;
    constexpr int kYaws[5] = {-30, -15, 0, 15, 30};

    DatasetManifest relative;  // file names only; resolved on reload
    GridGeometry geometry;
    char name[64];

    // Ground tones cycle through well-separated intensities; consecutive
    // points always render against clearly different backgrounds.
    constexpr int kGroundTones[8] = {128, 64, 192, 96, 224, 48, 160, 112};

    for (int point = 0; point < config.n_points; ++point) {
        std::mt19937 rng(std::uint32_t(config.seed * 1000003ull + std::uint64_t(point)));
        const Image canvas = render_scene(side, kGroundTones[point % 8], rng);

        std::snprintf(name, sizeof(name), "p%02d_template.pgm", point);
        save_pgm(extract_view(canvas, tx0, ty0, w, h, 0), fs::path(config.output_dir) / name);
        char object[32];
        std::snprintf(object, sizeof(object), "scene%02d", point);
        relative.templates.push_back({name, {point, 1, 0}, object});

        for (int height = 0; height < 3; ++height) {
            const int y0 = ty0 + (height - 1) * shift;
            for (const int yaw : kYaws) {
                std::snprintf(name, sizeof(name), "p%02d_h%d_%s.pgm", point, height,
                              yaw_tag(yaw));
                save_pgm(extract_view(canvas, tx0, y0, w, h, yaw),
                         fs::path(config.output_dir) / name);
                relative.queries.push_back({name, {point, height, yaw}});
                geometry.entries.push_back(
                    {{point, height, yaw}, cell_position(point, height, yaw)});
            }
        }
    }

    SyntheticDataset dataset;
    dataset.manifest_path = (fs::path(config.output_dir) / "manifest.txt").string();
    dataset.geometry_path = (fs::path(config.output_dir) / "grid_geometry.json").string();
    save_manifest(relative, dataset.manifest_path);
    save_geometry(geometry, dataset.geometry_path);
    dataset.manifest = load_manifest(dataset.manifest_path);
    dataset.geometry = std::move(geometry);
    return dataset;
}

}  // namespace featbench
