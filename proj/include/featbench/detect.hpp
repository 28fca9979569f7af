#pragma once

#include "featbench/fast.hpp"
#include "featbench/image.hpp"
#include "featbench/keypoint.hpp"

namespace featbench {

/// Tunables for all five detectors; defaults follow the original publications.
struct DetectorParams {
    int fast_threshold = 20;
    int fast_arc = 9;

    struct Sift {
        int octaves = 0; ///< 0 = derive from image size
        int scales_per_octave = 3;
        double base_sigma = 1.6;
        double contrast_thresh = 0.03;
        double edge_ratio = 10.0;
    } sift;

    struct Surf {
        int octaves = 4;
        double hessian_thresh = 100.0;
    } surf;

    struct Orb {
        int n_features = 500;
        int levels = 8;
        double scale_factor = 1.2;
    } orb;

    struct Brisk {
        int octaves = 4;
        int fast_threshold = 20;
    } brisk;

    /// Throws std::invalid_argument when a threshold is non-positive or
    /// fast_arc leaves [9, 12].
    void validate() const;
};

/// Intensity-centroid orientation atan2(m01, m10) over a circular patch of
/// the given radius, in [0, 2*pi). Patch reads are clamped at borders.
float intensity_centroid_angle(const Image& img, float x, float y, int radius);

/// FAST corners over a Gaussian pyramid, ranked by Harris response across all
/// levels, top n_features kept. Coordinates are mapped back to base pixels;
/// orientation comes from the intensity centroid at the detection level;
/// scale = 31 * the level's downsampling factor; octave = level index.
KeypointList orb_detect(const Image& img, const DetectorParams& params);

/// Difference-of-Gaussian scale-space extrema with 3D quadratic refinement,
/// contrast and edge filtering, and gradient-histogram orientations (one
/// keypoint per dominant peak). scale = the Gaussian sigma of the fitted
/// level in base pixels.
KeypointList sift_detect(const Image& img, const DetectorParams& params);

/// Box-filter Hessian-determinant blob detector on the integral image, four
/// filter sizes per octave, 3x3x3 non-max suppression, scale interpolation,
/// and sliding-sector Haar orientation. scale = 1.2 * filter_size / 9.
KeypointList surf_detect(const Image& img, const DetectorParams& params);

/// FAST scores across octave and intra-octave layers with cross-scale
/// suppression and subpixel/sub-scale refinement. scale = fitted layer
/// factor * 7; orientation is left 0 for the descriptor to assign.
KeypointList brisk_detect(const Image& img, const DetectorParams& params);

} // namespace featbench
