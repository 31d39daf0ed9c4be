#pragma once

#include <cstddef>
#include <vector>

#include "iqs/errors.hpp"
#include "iqs/subset.hpp"

namespace iqs {

// Cooperative game with transferable utility: one real value per coalition,
// stored over all 2^n subsets in binary-counter order (v(empty) included).
struct TUGame {
    int n = 0;
    std::vector<double> values; // length 2^n, values[mask] = v(mask)

    TUGame() = default;
    TUGame(int players, std::vector<double> vals) : n(players), values(std::move(vals)) {
        if (values.size() != (std::size_t{1} << n))
            throw PreconditionError("TUGame: expected 2^n values");
    }

    double value(subset_t s) const { return values[s]; }
    std::size_t size() const { return values.size(); }

    // v(S) = 1 iff T subseteq S
    static TUGame unanimity(int n, subset_t t);
    // v(S) = sum of c_j over j in S
    static TUGame additive(const std::vector<double>& c);
};

} // namespace iqs
