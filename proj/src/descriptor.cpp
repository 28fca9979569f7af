#include "featbench/descriptor.hpp"

#include <cstring>
#include <stdexcept>
#include <string>

namespace featbench {

Descriptor Descriptor::binary(int bits) {
    if (bits != 256 && bits != 512)
        throw std::invalid_argument("Descriptor: binary length must be 256 or 512, got " + std::to_string(bits));
    Descriptor d;
    d.kind = DescriptorVariant::binary;
    d.bit_length = bits;
    d.words.assign(static_cast<std::size_t>(bits) / 64, 0);
    return d;
}

Descriptor Descriptor::real_valued(std::vector<float> v) {
    if (v.size() != 128 && v.size() != 64)
        throw std::invalid_argument("Descriptor: real length must be 64 or 128, got " + std::to_string(v.size()));
    Descriptor d;
    d.kind = DescriptorVariant::real;
    d.values = std::move(v);
    return d;
}

std::vector<std::uint8_t> Descriptor::to_bytes() const {
    std::vector<std::uint8_t> bytes;
    if (kind == DescriptorVariant::binary) {
        bytes.resize(static_cast<std::size_t>(bit_length) / 8);
        for (std::size_t i = 0; i < bytes.size(); ++i)
            bytes[i] = static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8)));
    } else {
        bytes.resize(values.size() * 4);
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::uint32_t u;
            std::memcpy(&u, &values[i], 4);
            bytes[4 * i] = static_cast<std::uint8_t>(u);
            bytes[4 * i + 1] = static_cast<std::uint8_t>(u >> 8);
            bytes[4 * i + 2] = static_cast<std::uint8_t>(u >> 16);
            bytes[4 * i + 3] = static_cast<std::uint8_t>(u >> 24);
        }
    }
    return bytes;
}

Descriptor Descriptor::binary_from_bytes(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() != 32 && bytes.size() != 64)
        throw std::invalid_argument("Descriptor: binary payload must be 32 or 64 bytes, got " + std::to_string(bytes.size()));
    Descriptor d = binary(static_cast<int>(bytes.size()) * 8);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        d.words[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
    return d;
}

Descriptor Descriptor::real_from_bytes(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() != 128 * 4 && bytes.size() != 64 * 4)
        throw std::invalid_argument("Descriptor: real payload must be 256 or 512 bytes, got " + std::to_string(bytes.size()));
    std::vector<float> values(bytes.size() / 4);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::uint32_t u = static_cast<std::uint32_t>(bytes[4 * i]) |
                                (static_cast<std::uint32_t>(bytes[4 * i + 1]) << 8) |
                                (static_cast<std::uint32_t>(bytes[4 * i + 2]) << 16) |
                                (static_cast<std::uint32_t>(bytes[4 * i + 3]) << 24);
        std::memcpy(&values[i], &u, 4);
    }
    return real_valued(std::move(values));
}

} // namespace featbench
