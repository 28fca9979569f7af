#pragma once

// Shared test helpers: deterministic images, independently written oracles,
// temp directories, and a tiny subprocess runner. Oracles here are separate
// implementations of the contracts under test, not calls back into the
// library.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

#include "featbench/descriptor.hpp"
#include "featbench/image.hpp"
#include "featbench/keypoint.hpp"
#include "featbench/match.hpp"

namespace testsupport {

/// Same explicit uniform mapping the library uses, so fixtures stay
/// identical across standard libraries.
inline double unit_draw(std::mt19937& rng) {
    return (double(rng()) + 0.5) / 4294967296.0;
}

inline int draw_int(std::mt19937& rng, int lo, int hi) {
    return lo + int(unit_draw(rng) * double(hi - lo + 1));
}

/// Uniform random intensities — enough corners for oracle scans.
inline featbench::Image noise_image(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<std::uint8_t> px(std::size_t(w) * h);
    for (auto& p : px)
        p = std::uint8_t(rng() & 0xff);
    return featbench::Image(w, h, std::move(px));
}

/// Rectangles and discs on a mid-gray ground: structured texture with
/// corners, edges, and blobs for detector/descriptor tests.
inline featbench::Image textured_image(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<std::uint8_t> px(std::size_t(w) * h, 120);
    featbench::Image img(w, h, std::move(px));
    const int n_rects = std::max(6, w * h / 900);
    for (int i = 0; i < n_rects; ++i) {
        const int rw = draw_int(rng, 4, std::max(5, w / 4));
        const int rh = draw_int(rng, 4, std::max(5, h / 4));
        const int x0 = draw_int(rng, 0, w - 2);
        const int y0 = draw_int(rng, 0, h - 2);
        const std::uint8_t tone = std::uint8_t(unit_draw(rng) < 0.5 ? draw_int(rng, 10, 80)
                                                                    : draw_int(rng, 170, 245));
        for (int y = y0; y < std::min(h, y0 + rh); ++y)
            for (int x = x0; x < std::min(w, x0 + rw); ++x)
                img.at(x, y) = tone;
    }
    const int n_discs = std::max(4, w * h / 1600);
    for (int i = 0; i < n_discs; ++i) {
        const double cx = unit_draw(rng) * w;
        const double cy = unit_draw(rng) * h;
        const double r = 2.0 + unit_draw(rng) * (std::min(w, h) / 8.0);
        const std::uint8_t tone = std::uint8_t(draw_int(rng, 20, 235));
        for (int y = std::max(0, int(cy - r)); y <= std::min(h - 1, int(cy + r)); ++y)
            for (int x = std::max(0, int(cx - r)); x <= std::min(w - 1, int(cx + r)); ++x)
                if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r)
                    img.at(x, y) = tone;
    }
    return img;
}

/// Bilinear sample with out-of-bounds reported through `ok`.
inline double bilinear_sample(const featbench::Image& img, double fx, double fy, bool& ok) {
    const int x0 = int(std::floor(fx)), y0 = int(std::floor(fy));
    if (x0 < 0 || y0 < 0 || x0 + 1 >= img.width() || y0 + 1 >= img.height()) {
        ok = false;
        return 0.0;
    }
    ok = true;
    const double ax = fx - x0, ay = fy - y0;
    return (1 - ax) * (1 - ay) * img.at(x0, y0) + ax * (1 - ay) * img.at(x0 + 1, y0) +
           (1 - ax) * ay * img.at(x0, y0 + 1) + ax * ay * img.at(x0 + 1, y0 + 1);
}

/// Rotation oracle: mean |rotate(reference, deg) - probe| over the pixels
/// whose rotated source stays inside the reference (y-down frame, rotation
/// about the image center). Written from the transform definition, not from
/// the generator's code.
inline double mean_abs_diff_rotated(const featbench::Image& reference,
                                    const featbench::Image& probe, double deg) {
    const double rad = deg * std::numbers::pi / 180.0;
    const double c = std::cos(rad), s = std::sin(rad);
    const double cx = (reference.width() - 1) / 2.0, cy = (reference.height() - 1) / 2.0;
    double sum = 0.0;
    std::size_t n = 0;
    for (int y = 0; y < probe.height(); ++y) {
        for (int x = 0; x < probe.width(); ++x) {
            const double u = x - cx, v = y - cy;
            bool ok = false;
            const double src = bilinear_sample(reference, cx + u * c - v * s, cy + u * s + v * c, ok);
            if (!ok)
                continue;
            sum += std::abs(src - probe.at(x, y));
            ++n;
        }
    }
    return n == 0 ? std::numeric_limits<double>::max() : sum / double(n);
}

/// Direct 16-pixel segment-test scan (no score map, no non-max): a pixel is
/// a corner when some wraparound-contiguous run of >= arc circle pixels is
/// entirely brighter than center+threshold or entirely darker than
/// center-threshold.
inline std::vector<std::pair<int, int>> naive_fast(const featbench::Image& img, int threshold,
                                                   int arc) {
    static constexpr int circle[16][2] = {{0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0}, {3, 1},
                                          {2, 2},  {1, 3},  {0, 3},  {-1, 3}, {-2, 2}, {-3, 1},
                                          {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3}};
    std::vector<std::pair<int, int>> corners;
    for (int y = 3; y < img.height() - 3; ++y) {
        for (int x = 3; x < img.width() - 3; ++x) {
            const int c = img.at(x, y);
            bool corner = false;
            for (int start = 0; start < 16 && !corner; ++start) {
                bool all_bright = true, all_dark = true;
                for (int k = 0; k < arc; ++k) {
                    const int v = img.at(x + circle[(start + k) % 16][0],
                                         y + circle[(start + k) % 16][1]);
                    all_bright = all_bright && v > c + threshold;
                    all_dark = all_dark && v < c - threshold;
                }
                corner = all_bright || all_dark;
            }
            if (corner)
                corners.emplace_back(x, y);
        }
    }
    return corners;
}

/// Exhaustive nearest + runner-up scan with the same tie rule (lowest train
/// index wins) and optional mutual cross-check.
inline std::vector<featbench::Match> naive_match(const std::vector<featbench::Descriptor>& queries,
                                                 const std::vector<featbench::Descriptor>& trains,
                                                 bool cross_check) {
    using featbench::Descriptor;
    const auto dist = [](const Descriptor& a, const Descriptor& b) {
        if (a.kind == featbench::DescriptorVariant::binary)
            return double(featbench::hamming(a, b));
        return featbench::l2(a, b);
    };
    std::vector<featbench::Match> out;
    for (std::size_t q = 0; q < queries.size(); ++q) {
        std::vector<double> d(trains.size());
        for (std::size_t t = 0; t < trains.size(); ++t)
            d[t] = dist(queries[q], trains[t]);
        std::size_t best = 0;
        for (std::size_t t = 1; t < trains.size(); ++t)
            if (d[t] < d[best])
                best = t;
        double second = std::numeric_limits<double>::max();
        for (std::size_t t = 0; t < trains.size(); ++t)
            if (t != best)
                second = std::min(second, d[t]);
        if (cross_check) {
            std::size_t reverse = 0;
            for (std::size_t p = 1; p < queries.size(); ++p)
                if (dist(queries[p], trains[best]) < dist(queries[reverse], trains[best]))
                    reverse = p;
            if (reverse != q)
                continue;
        }
        out.push_back({int(q), int(best), d[best], second});
    }
    return out;
}

inline featbench::Descriptor random_binary(std::mt19937& rng, int bits = 256) {
    featbench::Descriptor d = featbench::Descriptor::binary(bits);
    for (auto& w : d.words)
        w = (std::uint64_t(rng()) << 32) | rng();
    const int tail = bits % 64;
    if (tail != 0)
        d.words.back() &= (std::uint64_t(1) << tail) - 1;
    return d;
}

inline featbench::Descriptor random_real(std::mt19937& rng, int dims = 64) {
    std::vector<float> v(static_cast<std::size_t>(dims));
    for (auto& f : v)
        f = float(unit_draw(rng));
    return featbench::Descriptor::real_valued(std::move(v));
}

/// Self-deleting temp directory.
struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static std::atomic<unsigned> counter{0};
        std::random_device rd;
        const auto tag = std::to_string(rd()) + "-" + std::to_string(counter.fetch_add(1));
        path = std::filesystem::temp_directory_path() / ("featbench-test-" + tag);
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string str() const { return path.string(); }
};

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command capturing stdout+stderr.
inline CommandResult run_command(const std::string& cmd) {
    CommandResult result;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe)
        return result;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
        result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testsupport
