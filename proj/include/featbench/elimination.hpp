#pragma once

#include <cstddef>
#include <vector>

#include "featbench/detect.hpp"
#include "featbench/histogram.hpp"
#include "featbench/image.hpp"

namespace featbench {

/// Outcome of the keypoint-count hysteresis stage. `kept` and `rejected`
/// partition the query indices; `counts[i]` is the FAST keypoint count of
/// query i.
struct CountFilterResult {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> rejected;
    std::vector<std::size_t> counts;
};

/// First elimination stage: counts FAST keypoints on every query image and
/// keeps only those whose count lies in [lower, upper]. FAST is used here
/// regardless of which detector the combination under test runs later.
/// Throws std::invalid_argument when lower >= upper.
CountFilterResult keypoint_count_filter(const std::vector<Image>& queries, std::size_t lower,
                                        std::size_t upper, const DetectorParams& params = {});

/// Second elimination stage: indices of templates whose intensity-histogram
/// correlation with the query exceeds `threshold`. Only these candidates
/// proceed to descriptor matching.
std::vector<std::size_t> histogram_prefilter(const Image& query, const std::vector<Image>& templates,
                                             double threshold);

/// Same stage on precomputed histograms, so the benchmark can histogram each
/// image once.
std::vector<std::size_t> histogram_prefilter(const Histogram& query,
                                             const std::vector<Histogram>& templates,
                                             double threshold);

}  // namespace featbench
