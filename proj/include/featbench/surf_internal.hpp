#pragma once

#include "featbench/image.hpp"

namespace featbench {

/// Area-normalized box-filter approximations of the second derivatives at one
/// pixel for one filter size (size = 3 * lobe, odd).
struct SurfHessian {
    double dxx = 0.0;
    double dyy = 0.0;
    double dxy = 0.0;
};

SurfHessian surf_hessian_at(const IntegralImage& ii, int x, int y, int size);

/// Haar wavelet responses of total side `size` (even) centered at (x, y),
/// x response = right half minus left half, y response = lower minus upper.
double haar_x(const IntegralImage& ii, int x, int y, int size);
double haar_y(const IntegralImage& ii, int x, int y, int size);

/// Dominant orientation by the sliding pi/3 sector over Haar responses
/// sampled on a radius-6s grid; 0 for structure-free neighborhoods.
float surf_orientation(const IntegralImage& ii, float x, float y, float s);

} // namespace featbench
