#pragma once

#include <string>
#include <vector>

namespace featbench {

enum class DetectorKind { Orb, Surf, Sift, Fast, Brisk };
enum class DescriptorKind { Brief, Brisk, Sift, Surf, Orb };

/// One detector/descriptor pairing evaluated by the benchmark.
struct CombinationId {
    DetectorKind detector = DetectorKind::Fast;
    DescriptorKind descriptor = DescriptorKind::Brief;

    bool operator==(const CombinationId&) const = default;
};

const char* detector_name(DetectorKind kind);
const char* descriptor_name(DescriptorKind kind);

/// "FAST-SURF" style name used in configs, reports, and cache file names.
std::string combination_name(const CombinationId& id);

/// Parses a "DETECTOR-DESCRIPTOR" name. Throws ConfigError when the name is
/// not one of the evaluated pairings.
CombinationId parse_combination(const std::string& name);

/// The full evaluation matrix: every detector/descriptor pairing except
/// SIFT-detector with ORB-descriptor and BRISK-detector with BRISK-descriptor,
/// grouped by detector (ORB, SURF, SIFT, FAST, BRISK) with descriptors ordered
/// BRIEF, BRISK, SIFT, SURF, ORB inside each group. 23 entries.
std::vector<CombinationId> combination_matrix();

}  // namespace featbench
