#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pimalign/scoring.hpp"
#include "pimalign/sequence.hpp"

namespace pimalign {

// Horizontal partition of an n x m DP matrix into ceil(n/p) blocks of p rows.
// The final block is logically padded; padded rows compute but are discarded.
struct BlockPlan {
    uint32_t p = 1;
    uint64_t n = 0;         // blocked-sequence length (rows)
    uint64_t m = 0;         // streamed-sequence length (cols)
    uint64_t num_blocks = 0;
    uint32_t pad = 0;

    uint32_t real_rows(uint64_t block_idx) const {
        return block_idx + 1 == num_blocks ? p - pad : p;
    }
};

BlockPlan plan_blocks(uint64_t n, uint64_t m, uint32_t p);

// Memory traffic a full alignment requires, in the engine's native units
// (characters for sequence reads, cells for boundary rows).
struct AccessTrace {
    uint64_t boundary_reads = 0;
    uint64_t boundary_writes = 0;
    uint64_t blocked_seq_char_reads = 0;
    uint64_t streamed_seq_char_reads = 0;
    uint64_t cell_updates = 0;

    AccessTrace& operator+=(const AccessTrace& o) {
        boundary_reads += o.boundary_reads;
        boundary_writes += o.boundary_writes;
        blocked_seq_char_reads += o.blocked_seq_char_reads;
        streamed_seq_char_reads += o.streamed_seq_char_reads;
        cell_updates += o.cell_updates;
        return *this;
    }
    bool operator==(const AccessTrace&) const = default;
};

// Instrumentation hook: called once per real cell in computation order.
using CellObserver = std::function<void(uint64_t row, uint64_t col)>;

struct BlockResult {
    std::vector<int32_t> boundary_out;  // lowermost row, cols 1..m
    int32_t last_real_row_corner = 0;   // cell(last real row of the block, m)
    AccessTrace trace;
};

// One block of the anti-diagonal flow: m+p-1 wavefront steps over RA1/RA2
// register arrays. boundary_in is the previous block's lowermost row (or the
// j*gap initialization row for block 0), cols 1..m.
BlockResult run_block(const BlockPlan& plan, uint64_t block_idx, const Sequence& blocked,
                      const Sequence& streamed, const ScoringScheme& scheme,
                      const std::vector<int32_t>& boundary_in,
                      const CellObserver& observer = nullptr);

// Which sequence stays stationary in the PE. The reference is blocked per the
// dataflow description; the flag exists for experimentation.
enum class BlockedRole { Reference, Query };

struct WavefrontResult {
    int32_t score = 0;
    AccessTrace trace;
    std::size_t peak_live_cells = 0;  // register + boundary-row cells held at once
};

// Blocks processed in serial; score is bit-identical to nw_score for every p.
WavefrontResult wavefront_score(const Sequence& query, const Sequence& reference,
                                const ScoringScheme& scheme, uint32_t p,
                                BlockedRole blocked_role = BlockedRole::Reference,
                                const CellObserver& observer = nullptr);

} // namespace pimalign
