#pragma once

#include <cstdint>
#include <string>

#include "pimalign/errors.hpp"

namespace pimalign {

// Match/mismatch/gap scores. A scheme where match does not dominate both
// penalties makes the alignment degenerate, so construction rejects it.
struct ScoringScheme {
    int32_t match = 1;
    int32_t mismatch = -1;
    int32_t gap = -2;

    ScoringScheme() = default;
    ScoringScheme(int32_t match_, int32_t mismatch_, int32_t gap_)
        : match(match_), mismatch(mismatch_), gap(gap_) {
        if (match <= mismatch || match <= gap)
            throw ConfigError("scoring scheme requires match > mismatch and match > gap (got " +
                              std::to_string(match) + "," + std::to_string(mismatch) + "," +
                              std::to_string(gap) + ")");
    }

    bool operator==(const ScoringScheme&) const = default;
};

inline int32_t score_pair(uint8_t a, uint8_t b, const ScoringScheme& s) {
    return a == b ? s.match : s.mismatch;
}

} // namespace pimalign
