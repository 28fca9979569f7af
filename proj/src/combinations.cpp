#include "featbench/combinations.hpp"

#include <array>

#include "featbench/errors.hpp"

namespace featbench {

const char* detector_name(DetectorKind kind) {
    switch (kind) {
        case DetectorKind::Orb: return "ORB";
        case DetectorKind::Surf: return "SURF";
        case DetectorKind::Sift: return "SIFT";
        case DetectorKind::Fast: return "FAST";
        case DetectorKind::Brisk: return "BRISK";
    }
    return "?";
}

const char* descriptor_name(DescriptorKind kind) {
    switch (kind) {
        case DescriptorKind::Brief: return "BRIEF";
        case DescriptorKind::Brisk: return "BRISK";
        case DescriptorKind::Sift: return "SIFT";
        case DescriptorKind::Surf: return "SURF";
        case DescriptorKind::Orb: return "ORB";
    }
    return "?";
}

std::string combination_name(const CombinationId& id) {
    return std::string(detector_name(id.detector)) + "-" + descriptor_name(id.descriptor);
}

CombinationId parse_combination(const std::string& name) {
    for (const CombinationId& id : combination_matrix()) {
        if (combination_name(id) == name) {
            return id;
        }
    }
    throw ConfigError("unknown combination \"" + name +
                      "\" (expected DETECTOR-DESCRIPTOR, e.g. FAST-SURF)");
}

std::vector<CombinationId> combination_matrix() {
    constexpr std::array<DetectorKind, 5> detectors = {
        DetectorKind::Orb, DetectorKind::Surf, DetectorKind::Sift,
        DetectorKind::Fast, DetectorKind::Brisk,
    };
    constexpr std::array<DescriptorKind, 5> descriptors = {
        DescriptorKind::Brief, DescriptorKind::Brisk, DescriptorKind::Sift,
        DescriptorKind::Surf, DescriptorKind::Orb,
    };

    std::vector<CombinationId> matrix;
    matrix.reserve(23);
    for (DetectorKind det : detectors) {
        for (DescriptorKind desc : descriptors) {
            // The two pairings the evaluation matrix leaves out.
            if (det == DetectorKind::Sift && desc == DescriptorKind::Orb) continue;
            if (det == DetectorKind::Brisk && desc == DescriptorKind::Brisk) continue;
            matrix.push_back({det, desc});
        }
    }
    return matrix;
}

}  // namespace featbench
