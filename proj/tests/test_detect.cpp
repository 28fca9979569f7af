#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "featbench/detect.hpp"
#include "featbench/image.hpp"

#include "support.hpp"

using namespace featbench;
using testsupport::textured_image;

namespace {

/// Bright Gaussian blob on black, the canonical blob-detector target.
Image blob_image(int size, double cx, double cy, double sigma) {
    Image img(size, size, std::vector<std::uint8_t>(std::size_t(size) * size, 0));
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            img.at(x, y) = std::uint8_t(std::lround(255.0 * std::exp(-r2 / (2 * sigma * sigma))));
        }
    }
    return img;
}

double nearest_distance(const KeypointList& kps, double cx, double cy) {
    double best = 1e9;
    for (const Keypoint& kp : kps)
        best = std::min(best, std::hypot(kp.x - cx, kp.y - cy));
    return best;
}

} // namespace

TEST_CASE("intensity centroid angle matches the direct moment computation") {
    const Image img = textured_image(64, 64, 42);
    const int radius = 15;
    for (const auto& [px, py] : {std::pair{31.0f, 31.0f}, {20.0f, 35.0f}, {40.5f, 22.5f}}) {
        double m10 = 0.0, m01 = 0.0;
        // the patch is the rounded disc: pixels within radius + 0.5 of center
        const double r2 = (radius + 0.5) * (radius + 0.5);
        for (int dy = -radius; dy <= radius; ++dy)
            for (int dx = -radius; dx <= radius; ++dx)
                if (dx * dx + dy * dy <= r2) {
                    const double v = img.clamped_at(int(std::lround(px)) + dx,
                                                    int(std::lround(py)) + dy);
                    m10 += dx * v;
                    m01 += dy * v;
                }
        double expected = std::atan2(m01, m10);
        if (expected < 0)
            expected += 2 * std::numbers::pi;
        CHECK(intensity_centroid_angle(img, px, py, radius) ==
              doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("intensity centroid angle points at the mass, y-down") {
    Image img(41, 41, std::vector<std::uint8_t>(41 * 41, 0));
    for (int y = 25; y < 35; ++y) // mass below center -> +y -> angle near pi/2
        for (int x = 18; x < 23; ++x)
            img.at(x, y) = 255;
    const float a = intensity_centroid_angle(img, 20.0f, 20.0f, 15);
    CHECK(a == doctest::Approx(std::numbers::pi / 2).epsilon(0.1));
}

TEST_CASE("orb keeps at most n_features, ranked consistently") {
    const Image img = textured_image(160, 120, 9);
    DetectorParams params;
    const KeypointList full = orb_detect(img, params);
    CHECK(full.size() <= 500);
    CHECK(!full.empty());

    params.orb.n_features = 10;
    const KeypointList top10 = orb_detect(img, params);
    REQUIRE(top10.size() <= 10);
    // the capped set is a subset of the uncapped ranking
    for (const Keypoint& kp : top10) {
        const bool present = std::any_of(full.begin(), full.end(), [&](const Keypoint& other) {
            return other == kp;
        });
        CHECK(present);
    }
}

TEST_CASE("orb keypoints carry level-scaled footprints and centroid orientations") {
    const Image img = textured_image(160, 120, 10);
    DetectorParams params;
    bool saw_upper_level = false;
    for (const Keypoint& kp : orb_detect(img, params)) {
        CHECK(kp.x >= 15.0f);
        CHECK(kp.y >= 15.0f);
        CHECK(kp.x <= img.width() - 16.0f);
        CHECK(kp.y <= img.height() - 16.0f);
        CHECK(kp.scale >= 31.0f * 0.999f);
        CHECK(kp.orientation >= 0.0f);
        CHECK(kp.orientation < float(2 * std::numbers::pi));
        if (kp.octave > 0) {
            saw_upper_level = true;
            CHECK(kp.scale > 31.0f);
        }
    }
    CHECK(saw_upper_level);
}

TEST_CASE("sift finds a blob at its center and rejects flat images") {
    const Image blob = blob_image(96, 48.0, 48.0, 4.0);
    DetectorParams params;
    const KeypointList kps = sift_detect(blob, params);
    REQUIRE(!kps.empty());
    CHECK(nearest_distance(kps, 48.0, 48.0) < 3.0);
    for (const Keypoint& kp : kps)
        CHECK(kp.scale > 0.0f);

    const Image flat(96, 96, std::vector<std::uint8_t>(96 * 96, 128));
    CHECK(sift_detect(flat, params).empty());
}

TEST_CASE("sift needs a minimum image and obeys the contrast threshold") {
    DetectorParams params;
    const Image small = textured_image(48, 48, 3);
    CHECK_THROWS_AS(sift_detect(small, params), std::invalid_argument);

    const Image img = textured_image(128, 128, 4);
    const std::size_t at_default = sift_detect(img, params).size();
    params.sift.contrast_thresh = 0.2;
    const std::size_t at_strict = sift_detect(img, params).size();
    CHECK(at_strict <= at_default);
}

TEST_CASE("surf finds blobs and its scales come from the filter ladder") {
    const Image blob = blob_image(96, 48.0, 48.0, 5.0);
    DetectorParams params;
    const KeypointList kps = surf_detect(blob, params);
    REQUIRE(!kps.empty());
    CHECK(nearest_distance(kps, 48.0, 48.0) < 4.0);
    for (const Keypoint& kp : kps) {
        CHECK(kp.response >= float(params.surf.hessian_thresh));
        // scale = 1.2 * L / 9 with L >= 9 and scale interpolation between
        // neighboring filter sizes; anything below the base ladder is a bug
        CHECK(kp.scale >= 1.2f * 0.9f);
    }
}

TEST_CASE("surf threshold is monotone in keypoint count") {
    const Image img = textured_image(128, 128, 6);
    DetectorParams loose, strict;
    loose.surf.hessian_thresh = 50.0;
    strict.surf.hessian_thresh = 800.0;
    CHECK(surf_detect(img, strict).size() <= surf_detect(img, loose).size());
}

TEST_CASE("brisk detects across layers with refined positions") {
    const Image img = textured_image(160, 160, 12);
    DetectorParams params;
    const KeypointList kps = brisk_detect(img, params);
    REQUIRE(!kps.empty());
    for (const Keypoint& kp : kps) {
        CHECK(kp.x >= 0.0f);
        CHECK(kp.y >= 0.0f);
        CHECK(kp.x <= float(img.width() - 1));
        CHECK(kp.y <= float(img.height() - 1));
        CHECK(kp.scale > 0.0f);
        CHECK(kp.orientation == 0.0f); // descriptor assigns it later
        CHECK(kp.response >= float(params.brisk.fast_threshold));
    }
}

TEST_CASE("detector parameter validation") {
    DetectorParams params;
    params.fast_threshold = 0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params = {};
    params.fast_arc = 13;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params = {};
    params.sift.contrast_thresh = -1.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params = {};
    params.orb.scale_factor = 1.0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params = {};
    CHECK_NOTHROW(params.validate());
}
