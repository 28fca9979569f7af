#pragma once

#include <vector>

#include "featbench/descriptor.hpp"
#include "featbench/keypoint.hpp"

namespace featbench {

/// One query-to-train correspondence with its nearest and runner-up
/// distances (runner-up is the numeric max when only one train exists).
struct Match {
    int query_idx = 0;
    int train_idx = 0;
    double distance = 0.0;
    double second_distance = 0.0;

    bool operator==(const Match& other) const = default;
};

/// The per-image-pair geometric statistics: surviving-match count, arithmetic
/// mean of per-match orientation differences (degrees, wrapped to
/// [-180, 180)), and the minimum inter-keypoint pixel distance. An empty
/// match set carries min_distance = numeric max as the "no match" sentinel.
struct MatchStats {
    std::size_t n_correct = 0;
    double mean_angle_diff = 0.0;
    double min_distance = 0.0;

    bool operator==(const MatchStats& other) const = default;
};

/// Hamming distance (differing-bit count). Throws std::invalid_argument on
/// kind or length mismatch.
int hamming(const Descriptor& a, const Descriptor& b);

/// Euclidean distance. Throws std::invalid_argument on kind or length mismatch.
double l2(const Descriptor& a, const Descriptor& b);

/// Nearest-train match per query with the runner-up distance; ties broken by
/// the lowest train index; with cross_check only mutual nearest neighbors
/// survive. Lists must be non-empty and homogeneous in kind and length.
std::vector<Match> brute_force_match(const std::vector<Descriptor>& queries,
                                     const std::vector<Descriptor>& trains,
                                     bool cross_check);

/// Keeps matches passing the ratio test (distance <= ratio * second_distance;
/// ties survive at ratio 1) and the absolute cutoff distance <= max_distance.
/// ratio must lie in (0, 1].
std::vector<Match> filter_matches(const std::vector<Match>& matches, double ratio, double max_distance);

/// Aggregates the surviving matches into MatchStats using the keypoints'
/// positions and orientations. Match indices must be valid for both lists.
MatchStats match_stats(const std::vector<Match>& matches, const KeypointList& query_kps,
                       const KeypointList& train_kps);

/// The per-image-pair decision: matched iff n_correct >= min_correct.
bool image_pair_decision(const MatchStats& stats, std::size_t min_correct);

} // namespace featbench
