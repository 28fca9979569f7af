#include "featbench/fast.hpp"

#include <stdexcept>
#include <string>

namespace featbench {

const std::array<std::array<int, 2>, 16> kFastCircle = {{
    {0, -3}, {1, -3}, {2, -2}, {3, -1}, {3, 0}, {3, 1}, {2, 2}, {1, 3},
    {0, 3}, {-1, 3}, {-2, 2}, {-3, 1}, {-3, 0}, {-3, -1}, {-2, -2}, {-1, -3},
}};

namespace {

void check_args(const Image& img, int threshold, int arc) {
    if (img.width() < 7 || img.height() < 7)
        throw std::invalid_argument("fast: image must be at least 7x7, got " + std::to_string(img.width()) + "x" + std::to_string(img.height()));
    if (threshold <= 0)
        throw std::invalid_argument("fast: threshold must be positive");
    if (arc < 9 || arc > 12)
        throw std::invalid_argument("fast: arc must be in [9, 12], got " + std::to_string(arc));
}

// Largest threshold at which the segment test still passes, or 0 when the
// pixel is not a corner at threshold 1. diffs = circle minus center.
int segment_score(const int (&d)[16], int arc) {
    int best = 0;
    for (int start = 0; start < 16; ++start) {
        int window_min = 255;
        int window_max = -255;
        for (int k = 0; k < arc; ++k) {
            const int v = d[(start + k) & 15];
            window_min = window_min < v ? window_min : v;
            window_max = window_max > v ? window_max : v;
        }
        const int bright = window_min - 1;
        const int dark = -window_max - 1;
        if (bright > best) best = bright;
        if (dark > best) best = dark;
    }
    return best;
}

// Longest contiguous circle run (capped at 16) of pixels qualifying at the
// call threshold, over both polarities; tie-break key for non-max suppression.
int longest_run(const int (&d)[16], int threshold) {
    int best = 0;
    for (int polarity = 0; polarity < 2; ++polarity) {
        int run = 0;
        int first_run = -1;
        for (int i = 0; i < 16; ++i) {
            const bool hit = polarity == 0 ? d[i] > threshold : d[i] < -threshold;
            if (hit) {
                ++run;
                if (run > best) best = run;
            } else {
                if (first_run < 0) first_run = run;
                run = 0;
            }
        }
        // wrap-around join unless the whole circle qualified
        if (first_run < 0) {
            best = 16;
        } else if (run > 0 && run + first_run > best) {
            best = run + first_run < 16 ? run + first_run : 16;
        }
    }
    return best;
}

struct CornerMaps {
    std::vector<std::int16_t> score;
    std::vector<std::int8_t> run;
};

CornerMaps corner_maps(const Image& img, int threshold, int arc) {
    const int w = img.width();
    const int h = img.height();
    CornerMaps maps;
    maps.score.assign(static_cast<std::size_t>(w) * h, 0);
    maps.run.assign(static_cast<std::size_t>(w) * h, 0);

    const auto& pix = img.pixels();
    for (int y = 3; y < h - 3; ++y) {
        for (int x = 3; x < w - 3; ++x) {
            const int c = pix[static_cast<std::size_t>(y) * w + x];
            // An arc of >= 9 pixels covers more than half the circle, so it
            // must contain one pixel of each diametrically opposite pair.
            const int d0 = pix[static_cast<std::size_t>(y - 3) * w + x] - c;
            const int d8 = pix[static_cast<std::size_t>(y + 3) * w + x] - c;
            const int d4 = pix[static_cast<std::size_t>(y) * w + (x + 3)] - c;
            const int d12 = pix[static_cast<std::size_t>(y) * w + (x - 3)] - c;
            const bool bright_possible = (d0 > threshold || d8 > threshold) && (d4 > threshold || d12 > threshold);
            const bool dark_possible = (d0 < -threshold || d8 < -threshold) && (d4 < -threshold || d12 < -threshold);
            if (!bright_possible && !dark_possible)
                continue;

            int d[16];
            for (int i = 0; i < 16; ++i)
                d[i] = pix[static_cast<std::size_t>(y + kFastCircle[i][1]) * w + (x + kFastCircle[i][0])] - c;

            const int score = segment_score(d, arc);
            if (score < threshold)
                continue;
            maps.score[static_cast<std::size_t>(y) * w + x] = static_cast<std::int16_t>(score);
            maps.run[static_cast<std::size_t>(y) * w + x] = static_cast<std::int8_t>(longest_run(d, threshold));
        }
    }
    return maps;
}

} // namespace

FastScoreMap fast_score_map(const Image& img, int threshold, int arc) {
    check_args(img, threshold, arc);
    FastScoreMap map;
    map.width = img.width();
    map.height = img.height();
    map.scores = corner_maps(img, threshold, arc).score;
    return map;
}

KeypointList fast_detect(const Image& img, int threshold, int arc, bool nonmax) {
    check_args(img, threshold, arc);
    const int w = img.width();
    const int h = img.height();
    const CornerMaps maps = corner_maps(img, threshold, arc);

    KeypointList keypoints;
    for (int y = 3; y < h - 3; ++y) {
        for (int x = 3; x < w - 3; ++x) {
            const std::size_t idx = static_cast<std::size_t>(y) * w + x;
            const int score = maps.score[idx];
            if (score == 0)
                continue;
            if (nonmax) {
                const int run = maps.run[idx];
                bool beaten = false;
                for (int ny = y - 1; ny <= y + 1 && !beaten; ++ny) {
                    for (int nx = x - 1; nx <= x + 1; ++nx) {
                        if (nx == x && ny == y)
                            continue;
                        const std::size_t nidx = static_cast<std::size_t>(ny) * w + nx;
                        const int nscore = maps.score[nidx];
                        if (nscore == 0)
                            continue;
                        const int nrun = maps.run[nidx];
                        if (nscore > score || (nscore == score && nrun > run) ||
                            (nscore == score && nrun == run && nidx < idx)) {
                            beaten = true;
                            break;
                        }
                    }
                }
                if (beaten)
                    continue;
            }
            keypoints.push_back({static_cast<float>(x), static_cast<float>(y), 7.0f, 0.0f,
                                 static_cast<float>(score), 0});
        }
    }
    return keypoints;
}

} // namespace featbench
