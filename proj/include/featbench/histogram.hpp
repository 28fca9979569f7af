#pragma once

#include <array>

#include "featbench/image.hpp"

namespace featbench {

/// Normalized 256-bin intensity histogram; bins sum to 1.
struct Histogram {
    std::array<double, 256> bins{};

    bool operator==(const Histogram& other) const = default;
};

Histogram intensity_histogram(const Image& img);

/// Pearson correlation between two histograms, in [-1, 1]. If either
/// histogram has zero variance the result is 1.0 when the two are identical
/// and 0.0 otherwise.
double histogram_correlation(const Histogram& a, const Histogram& b);

} // namespace featbench
