#include "featbench/match.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace featbench {

int hamming(const Descriptor& a, const Descriptor& b) {
    if (a.kind != DescriptorVariant::binary || b.kind != DescriptorVariant::binary)
        throw std::invalid_argument("hamming: both descriptors must be binary");
    if (a.bit_length != b.bit_length)
        throw std::invalid_argument("hamming: length mismatch (" + std::to_string(a.bit_length) + " vs " + std::to_string(b.bit_length) + ")");
    int bits = 0;
    for (std::size_t i = 0; i < a.words.size(); ++i)
        bits += std::popcount(a.words[i] ^ b.words[i]);
    return bits;
}

double l2(const Descriptor& a, const Descriptor& b) {
    if (a.kind != DescriptorVariant::real || b.kind != DescriptorVariant::real)
        throw std::invalid_argument("l2: both descriptors must be real");
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("l2: length mismatch (" + std::to_string(a.values.size()) + " vs " + std::to_string(b.values.size()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        const double d = static_cast<double>(a.values[i]) - b.values[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

void check_homogeneous(const std::vector<Descriptor>& queries, const std::vector<Descriptor>& trains) {
    if (queries.empty() || trains.empty())
        throw std::invalid_argument("brute_force_match: descriptor lists must be non-empty");
    const Descriptor& ref = queries.front();
    const auto matches_ref = [&](const Descriptor& d) {
        return d.kind == ref.kind &&
               (ref.kind == DescriptorVariant::binary ? d.bit_length == ref.bit_length
                                                   : d.values.size() == ref.values.size());
    };
    for (const auto& d : queries)
        if (!matches_ref(d))
            throw std::invalid_argument("brute_force_match: mixed descriptor variants in query list");
    for (const auto& d : trains)
        if (!matches_ref(d))
            throw std::invalid_argument("brute_force_match: query/train descriptor variants differ");
}

} // namespace

std::vector<Match> brute_force_match(const std::vector<Descriptor>& queries,
                                     const std::vector<Descriptor>& trains,
                                     bool cross_check) {
    check_homogeneous(queries, trains);
    const bool binary = queries.front().kind == DescriptorVariant::binary;
    const auto kernel = [binary](const Descriptor& a, const Descriptor& b) {
        return binary ? static_cast<double>(hamming(a, b)) : l2(a, b);
    };

    std::vector<Match> matches;
    matches.reserve(queries.size());
    for (std::size_t q = 0; q < queries.size(); ++q) {
        int best = -1;
        double best_dist = std::numeric_limits<double>::max();
        double second = std::numeric_limits<double>::max();
        for (std::size_t t = 0; t < trains.size(); ++t) {
            const double d = kernel(queries[q], trains[t]);
            if (d < best_dist) {
                second = best_dist;
                best_dist = d;
                best = static_cast<int>(t);
            } else if (d < second) {
                second = d;
            }
        }
        matches.push_back({static_cast<int>(q), best, best_dist, second});
    }

    if (cross_check) {
        std::vector<int> train_best(trains.size(), -1);
        std::vector<double> train_dist(trains.size(), std::numeric_limits<double>::max());
        for (std::size_t t = 0; t < trains.size(); ++t) {
            for (std::size_t q = 0; q < queries.size(); ++q) {
                const double d = kernel(queries[q], trains[t]);
                if (d < train_dist[t]) {
                    train_dist[t] = d;
                    train_best[t] = static_cast<int>(q);
                }
            }
        }
        std::vector<Match> mutual;
        for (const Match& m : matches)
            if (train_best[m.train_idx] == m.query_idx)
                mutual.push_back(m);
        return mutual;
    }
    return matches;
}

std::vector<Match> filter_matches(const std::vector<Match>& matches, double ratio, double max_distance) {
    if (!(ratio > 0.0) || ratio > 1.0)
        throw std::invalid_argument("filter_matches: ratio must be in (0, 1], got " + std::to_string(ratio));
    std::vector<Match> kept;
    for (const Match& m : matches)
        if (m.distance <= ratio * m.second_distance && m.distance <= max_distance)
            kept.push_back(m);
    return kept;
}

MatchStats match_stats(const std::vector<Match>& matches, const KeypointList& query_kps,
                       const KeypointList& train_kps) {
    MatchStats stats;
    stats.n_correct = matches.size();
    if (matches.empty()) {
        stats.min_distance = std::numeric_limits<double>::max();
        return stats;
    }

    double angle_sum = 0.0;
    double min_dist = std::numeric_limits<double>::max();
    for (const Match& m : matches) {
        const Keypoint& q = query_kps.at(static_cast<std::size_t>(m.query_idx));
        const Keypoint& t = train_kps.at(static_cast<std::size_t>(m.train_idx));
        const double diff_deg = (q.orientation - t.orientation) * 180.0 / std::numbers::pi;
        double wrapped = std::fmod(diff_deg + 180.0, 360.0);
        if (wrapped < 0.0)
            wrapped += 360.0;
        angle_sum += wrapped - 180.0;
        min_dist = std::min(min_dist, std::hypot(static_cast<double>(q.x) - t.x, static_cast<double>(q.y) - t.y));
    }
    stats.mean_angle_diff = angle_sum / static_cast<double>(matches.size());
    stats.min_distance = min_dist;
    return stats;
}

bool image_pair_decision(const MatchStats& stats, std::size_t min_correct) {
    return stats.n_correct >= min_correct;
}

} // namespace featbench
