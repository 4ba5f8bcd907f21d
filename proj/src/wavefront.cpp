#include "pimalign/wavefront.hpp"

#include <algorithm>

#include "pimalign/errors.hpp"

namespace pimalign {

BlockPlan plan_blocks(uint64_t n, uint64_t m, uint32_t p) {
    if (p == 0) throw ConfigError("block width p must be >= 1");
    BlockPlan plan;
    plan.p = p;
    plan.n = n;
    plan.m = m;
    plan.num_blocks = (n + p - 1) / p;
    plan.pad = static_cast<uint32_t>(plan.num_blocks * p - n);
    return plan;
}

BlockResult run_block(const BlockPlan& plan, uint64_t block_idx, const Sequence& blocked,
                      const Sequence& streamed, const ScoringScheme& scheme,
                      const std::vector<int32_t>& boundary_in, const CellObserver& observer) {
    const uint32_t p = plan.p;
    const uint64_t m = plan.m;
    if (boundary_in.size() != m)
        throw InputError("boundary_in has " + std::to_string(boundary_in.size()) +
                         " cells, expected m=" + std::to_string(m));

    const uint64_t base_row = block_idx * p;  // rows base_row+1 .. base_row+p
    const uint32_t real = plan.real_rows(block_idx);

    BlockResult res;
    res.boundary_out.assign(m, 0);
    res.trace.blocked_seq_char_reads = real;
    res.trace.streamed_seq_char_reads = m;
    res.trace.cell_updates = static_cast<uint64_t>(real) * m;
    if (block_idx > 0) res.trace.boundary_reads = m;
    if (block_idx + 1 < plan.num_blocks) res.trace.boundary_writes = m;

    if (m == 0) {
        res.last_real_row_corner = static_cast<int32_t>(base_row + real) * scheme.gap;
        return res;
    }

    // Stationary characters for this block; padded lanes get a sentinel.
    std::vector<uint8_t> chars(p, 0);
    for (uint32_t i = 0; i < real; ++i) chars[i] = blocked.code_at(base_row + i);

    std::vector<int32_t> ra1(p, 0), ra2(p, 0);
    int32_t north_prev = 0;  // lane 0's north from the previous step, reused as north-west

    for (uint64_t t = 1; t <= m + p - 1; ++t) {
        const uint64_t lane_lo = t > m ? t - m : 0;
        const uint64_t lane_hi = std::min<uint64_t>(p - 1, t - 1);
        const int32_t north_in = t <= m ? boundary_in[t - 1] : 0;
        // Descending lanes: each lane reads the previous step's ra1/ra2 of the
        // lane above before that lane overwrites them.
        for (uint64_t i = lane_hi + 1; i-- > lane_lo;) {
            const uint64_t col = t - i;
            const uint64_t row = base_row + i + 1;
            const int32_t north = i == 0 ? north_in : ra1[i - 1];
            const int32_t nw = i == 0 ? (col == 1 ? static_cast<int32_t>(base_row) * scheme.gap
                                                  : north_prev)
                                      : (col == 1 ? static_cast<int32_t>(row - 1) * scheme.gap
                                                  : ra2[i - 1]);
            const int32_t west =
                col == 1 ? static_cast<int32_t>(row) * scheme.gap : ra1[i];
            const int32_t diag = nw + score_pair(chars[i], streamed.code_at(col - 1), scheme);
            const int32_t value = std::max({diag, north + scheme.gap, west + scheme.gap});
            ra2[i] = ra1[i];
            ra1[i] = value;
            if (i < real) {
                if (observer) observer(row, col);
                if (i + 1 == real && col == m) res.last_real_row_corner = value;
            }
            if (i + 1 == p) res.boundary_out[col - 1] = value;
        }
        north_prev = north_in;
    }
    return res;
}

WavefrontResult wavefront_score(const Sequence& query, const Sequence& reference,
                                const ScoringScheme& scheme, uint32_t p,
                                BlockedRole blocked_role, const CellObserver& observer) {
    const Sequence& blocked = blocked_role == BlockedRole::Reference ? reference : query;
    const Sequence& streamed = blocked_role == BlockedRole::Reference ? query : reference;
    const uint64_t n = blocked.length, m = streamed.length;
    const BlockPlan plan = plan_blocks(n, m, p);

    WavefrontResult out;
    out.peak_live_cells = 2 * static_cast<std::size_t>(p) + 2 * static_cast<std::size_t>(m) + 2;
    if (n == 0) {
        out.score = static_cast<int32_t>(m) * scheme.gap;
        return out;
    }

    std::vector<int32_t> boundary(m);
    for (uint64_t j = 1; j <= m; ++j) boundary[j - 1] = static_cast<int32_t>(j) * scheme.gap;

    for (uint64_t b = 0; b < plan.num_blocks; ++b) {
        BlockResult res = run_block(plan, b, blocked, streamed, scheme, boundary, observer);
        out.trace += res.trace;
        if (b + 1 == plan.num_blocks)
            out.score = res.last_real_row_corner;
        else
            boundary = std::move(res.boundary_out);
    }
    return out;
}

} // namespace pimalign
