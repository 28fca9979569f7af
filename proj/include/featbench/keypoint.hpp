#pragma once

#include <vector>

namespace featbench {

/// A detected interest point in base-image coordinates.
///  - scale is the detector-defined characteristic size in pixels (>= 1)
///  - orientation is radians in [0, 2*pi); 0 means the detector assigned none
///  - response is the detector's non-negative strength score
///  - octave is the pyramid/layer index the point was found at
struct Keypoint {
    float x = 0.0f;
    float y = 0.0f;
    float scale = 1.0f;
    float orientation = 0.0f;
    float response = 0.0f;
    int octave = 0;

    bool operator==(const Keypoint& other) const = default;
};

using KeypointList = std::vector<Keypoint>;

} // namespace featbench
