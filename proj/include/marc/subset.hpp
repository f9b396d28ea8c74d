#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace marc {

// Subset of the sources {0, ..., K-1} stored as a bit mask. K is capped at 20
// wherever all 2^K subsets are enumerated.
struct Subset {
    std::uint32_t mask = 0;

    static constexpr Subset empty() { return {0}; }
    static constexpr Subset full(int K) { return {(std::uint32_t{1} << K) - 1}; }
    static constexpr Subset single(int k) { return {std::uint32_t{1} << k}; }

    constexpr bool contains(int k) const { return (mask >> k) & 1u; }
    constexpr bool is_empty() const { return mask == 0; }
    constexpr int size() const { return std::popcount(mask); }
    constexpr Subset complement(int K) const { return {full(K).mask & ~mask}; }
    constexpr Subset with(int k) const { return {mask | (std::uint32_t{1} << k)}; }

    friend constexpr bool operator==(Subset, Subset) = default;
};

inline constexpr int kMaxEnumeratedUsers = 20;

// "{1,3}" with 1-based source labels; "{}" for the empty set.
inline std::string to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int k = 0; k < 32; ++k) {
        if (!s.contains(k)) continue;
        if (!first) out += ',';
        out += std::to_string(k + 1);
        first = false;
    }
    return out + "}";
}

}  // namespace marc
