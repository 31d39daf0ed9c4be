#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace iqs {

// Coalitions are bitmasks with player j (0-based) on bit j, enumerated in
// binary-counter order: the empty set is index 0, the grand coalition 2^n - 1.
// A decision outcome tuple j_1...j_n maps to the same index with maker 1 on
// the lowest bit. This little-endian convention is shared by every module.
using subset_t = std::uint32_t;

inline int popcount(subset_t s) { return std::popcount(s); }

inline bool is_subset_of(subset_t s, subset_t t) { return (s & ~t) == 0; }

inline std::string subset_label(subset_t s, int n) {
    std::string out = "{";
    bool first = true;
    for (int j = 0; j < n; ++j) {
        if (s & (subset_t{1} << j)) {
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
        }
    }
    out += "}";
    return out;
}

inline std::vector<int> subset_members(subset_t s, int n) {
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
        if (s & (subset_t{1} << j)) out.push_back(j);
    return out;
}

} // namespace iqs
