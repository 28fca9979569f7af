#include "featbench/elimination.hpp"

#include <stdexcept>
#include <string>

#include "featbench/fast.hpp"

namespace featbench {

CountFilterResult keypoint_count_filter(const std::vector<Image>& queries, std::size_t lower,
                                        std::size_t upper, const DetectorParams& params) {
    if (lower >= upper) {
        throw std::invalid_argument("keypoint_count_filter: lower (" + std::to_string(lower) +
                                    ") must be below upper (" + std::to_string(upper) + ")");
    }
    params.validate();

    CountFilterResult result;
    result.counts.reserve(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const std::size_t count =
            fast_detect(queries[i], params.fast_threshold, params.fast_arc, true).size();
        result.counts.push_back(count);
        if (count >= lower && count <= upper) {
            result.kept.push_back(i);
        } else {
            result.rejected.push_back(i);
        }
    }
    return result;
}

std::vector<std::size_t> histogram_prefilter(const Image& query, const std::vector<Image>& templates,
                                             double threshold) {
    std::vector<Histogram> template_hists;
    template_hists.reserve(templates.size());
    for (const Image& t : templates) {
        template_hists.push_back(intensity_histogram(t));
    }
    return histogram_prefilter(intensity_histogram(query), template_hists, threshold);
}

std::vector<std::size_t> histogram_prefilter(const Histogram& query,
                                             const std::vector<Histogram>& templates,
                                             double threshold) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < templates.size(); ++i) {
        if (histogram_correlation(query, templates[i]) > threshold) {
            candidates.push_back(i);
        }
    }
    return candidates;
}

}  // namespace featbench
