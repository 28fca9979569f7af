#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "featbench/descriptor.hpp"
#include "featbench/image.hpp"
#include "featbench/keypoint.hpp"

namespace featbench {

/// Keypoints that survived border checks, index-aligned with their
/// descriptors; kept is always a subsequence of the input list.
struct DescribeResult {
    KeypointList kept;
    std::vector<Descriptor> descriptors;
};

/// 256 point pairs inside a 31x31 patch, drawn once per seed from an
/// isotropic Gaussian (sigma 31/5) and shared by BRIEF and ORB.
struct BriefPattern {
    std::uint32_t seed = 0;
    std::array<std::array<int, 4>, 256> pairs{}; // x1, y1, x2, y2
};

const BriefPattern& brief_pattern(std::uint32_t seed);
constexpr std::uint32_t kDefaultPatternSeed = 7;

/// The 60-point concentric sampling pattern at unit scale (keypoint scale 7):
/// ring radii, per-point smoothing sigmas, and the short/long pair index
/// lists (short pairs closer than 9.75, long pairs farther than 13.67).
struct BriskPattern {
    struct Point {
        double x, y, sigma;
    };
    std::vector<Point> points;
    std::vector<std::array<int, 2>> short_pairs;
    std::vector<std::array<int, 2>> long_pairs;
};

const BriskPattern& brisk_pattern();

/// 256-bit pairwise-comparison descriptor on the sigma-2 presmoothed image,
/// unrotated and unscaled; bit i = 1 iff intensity(p_i) < intensity(q_i).
DescribeResult brief_describe(const Image& img, const KeypointList& kps,
                              const BriefPattern& pattern = brief_pattern(kDefaultPatternSeed));

/// BRIEF with the pattern rotated by the keypoint orientation (quantized to
/// 2*pi/30) and scaled by keypoint scale / 31. Keypoints carrying orientation
/// 0 at the raw-FAST scale 7 first receive an intensity-centroid orientation.
DescribeResult orb_describe(const Image& img, const KeypointList& kps,
                            const BriefPattern& pattern = brief_pattern(kDefaultPatternSeed));

/// 512-bit descriptor over the concentric pattern scaled by keypoint
/// scale / 7; orientation comes from the long-pair gradient sum and replaces
/// orientation-0 keypoints' field; bit = 1 iff smoothed(a) > smoothed(b).
DescribeResult brisk_describe(const Image& img, const KeypointList& kps);

/// 4x4x8 gradient-orientation histogram grid (128 floats) with trilinear
/// interpolation and Gaussian weighting, window scaled by keypoint scale and
/// rotated by its orientation; orientation-0 keypoints get the dominant
/// gradient-histogram peak assigned first.
DescribeResult sift_describe(const Image& img, const KeypointList& kps);

/// 4x4 subregions of (sum dx, sum dy, sum |dx|, sum |dy|) Haar responses over
/// a 20s oriented window (64 floats); orientation-0 keypoints get the sliding
/// sector orientation assigned first.
DescribeResult surf_describe(const Image& img, const KeypointList& kps);

} // namespace featbench
