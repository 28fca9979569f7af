#include "featbench/histogram.hpp"

#include <algorithm>
#include <cmath>

namespace featbench {

Histogram intensity_histogram(const Image& img) {
    Histogram hist;
    for (std::uint8_t value : img.pixels())
        hist.bins[value] += 1.0;
    const double total = static_cast<double>(img.pixels().size());
    for (double& bin : hist.bins)
        bin /= total;
    return hist;
}

double histogram_correlation(const Histogram& a, const Histogram& b) {
    if (a == b)
        return 1.0;

    constexpr int n = 256;
    double mean_a = 0.0, mean_b = 0.0;
    for (int i = 0; i < n; ++i) {
        mean_a += a.bins[i];
        mean_b += b.bins[i];
    }
    mean_a /= n;
    mean_b /= n;

    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (int i = 0; i < n; ++i) {
        const double da = a.bins[i] - mean_a;
        const double db = b.bins[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    constexpr double kTinyVariance = 1e-24;
    if (var_a < kTinyVariance || var_b < kTinyVariance)
        return 0.0;
    return std::clamp(cov / std::sqrt(var_a * var_b), -1.0, 1.0);
}

} // namespace featbench
