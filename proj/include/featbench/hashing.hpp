#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>

namespace featbench {

inline constexpr std::uint64_t kFnvBasis = 14695981039346656037ull;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ull;

/// 64-bit FNV-1a over a byte range; pass a previous result as `h` to chain.
inline std::uint64_t fnv1a64(const void* data, std::size_t n, std::uint64_t h = kFnvBasis) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= bytes[i];
        h *= kFnvPrime;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = kFnvBasis) {
    return fnv1a64(s.data(), s.size(), h);
}

/// Fixed-width lowercase hex rendering used wherever hashes land in files.
inline std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace featbench
