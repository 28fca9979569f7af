#pragma once

#include <cstdint>
#include <vector>

namespace featbench {

enum class DescriptorVariant { binary, real };

/// Fixed-length feature descriptor: either a bitstring (256 or 512 bits) or a
/// real vector (128 or 64 floats, L2-normalized unless degenerate).
struct Descriptor {
    DescriptorVariant kind = DescriptorVariant::binary;
    int bit_length = 0;               ///< binary only
    std::vector<std::uint64_t> words; ///< binary payload, bit i = words[i/64] >> (i%64)
    std::vector<float> values;        ///< real payload

    static Descriptor binary(int bits);
    static Descriptor real_valued(std::vector<float> v);

    bool bit(int i) const { return (words[i / 64] >> (i % 64)) & 1; }
    void set_bit(int i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }

    /// Binary: raw bit-packed bytes (32 or 64); real: little-endian float32.
    std::vector<std::uint8_t> to_bytes() const;
    static Descriptor binary_from_bytes(const std::vector<std::uint8_t>& bytes);
    static Descriptor real_from_bytes(const std::vector<std::uint8_t>& bytes);

    bool operator==(const Descriptor& other) const = default;
};

} // namespace featbench
