#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "featbench/image.hpp"
#include "featbench/keypoint.hpp"

namespace featbench {

/// The 16 offsets of the radius-3 Bresenham circle, clockwise from 12 o'clock.
extern const std::array<std::array<int, 2>, 16> kFastCircle;

/// Segment-test corner scores for every pixel, same layout as the image.
/// score(x, y) is the largest threshold at which (x, y) still passes the
/// arc-contiguous segment test, or 0 for non-corners at the given threshold.
/// Pixels closer than 3 to the border are always 0.
struct FastScoreMap {
    int width = 0;
    int height = 0;
    std::vector<std::int16_t> scores;

    std::int16_t at(int x, int y) const { return scores[static_cast<std::size_t>(y) * width + x]; }
};

/// Computes the segment-test score map. threshold > 0, arc in [9, 12],
/// image at least 7x7 (std::invalid_argument otherwise).
FastScoreMap fast_score_map(const Image& img, int threshold, int arc);

/// FAST corner detector. A pixel is a corner when at least `arc` contiguous
/// circle pixels are all brighter than center+threshold or all darker than
/// center-threshold. response = segment-test score; with nonmax, a corner
/// survives only if it beats every 8-neighbor corner on the key
/// (score, longest qualifying arc run, earlier raster position).
/// Returned keypoints have scale 7, orientation 0, octave 0, raster order.
KeypointList fast_detect(const Image& img, int threshold, int arc, bool nonmax);

} // namespace featbench
