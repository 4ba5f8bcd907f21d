#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "pimalign/nw.hpp"
#include "pimalign/wavefront.hpp"

using namespace pimalign;

TEST_CASE("plan_blocks") {
    CHECK(plan_blocks(8, 5, 4).num_blocks == 2);
    CHECK(plan_blocks(8, 5, 4).pad == 0);
    CHECK(plan_blocks(10, 5, 4).num_blocks == 3);
    CHECK(plan_blocks(10, 5, 4).pad == 2);
    CHECK(plan_blocks(0, 5, 4).num_blocks == 0);
    CHECK_THROWS_AS(plan_blocks(8, 5, 0), ConfigError);
}

TEST_CASE("run_block against the full matrix") {
    ScoringScheme s{1, -1, -2};
    std::mt19937_64 rng(10);

    SUBCASE("p=1 collapses to a plain row fill") {
        Sequence a = encode_sequence(oracle::random_dna(rng, 6));
        Sequence b = encode_sequence(oracle::random_dna(rng, 9));
        DpMatrix dp = nw_fill(a, b, s);
        BlockPlan plan = plan_blocks(a.length, b.length, 1);
        std::vector<int32_t> boundary(b.length);
        for (std::size_t j = 1; j <= b.length; ++j) boundary[j - 1] = static_cast<int32_t>(j) * s.gap;
        for (uint64_t blk = 0; blk < plan.num_blocks; ++blk) {
            BlockResult res = run_block(plan, blk, a, b, s, boundary);
            for (std::size_t j = 1; j <= b.length; ++j)
                CHECK(res.boundary_out[j - 1] == dp.cell(blk + 1, j));
            boundary = res.boundary_out;
        }
    }

    SUBCASE("block 0 boundary_out equals row p of nw_fill") {
        for (int it = 0; it < 20; ++it) {
            Sequence a = encode_sequence(oracle::random_dna(rng, 4));
            Sequence b = encode_sequence(oracle::random_dna(rng, 4));
            DpMatrix dp = nw_fill(a, b, s);
            BlockPlan plan = plan_blocks(4, 4, 2);
            std::vector<int32_t> init = {-2, -4, -6, -8};
            BlockResult res = run_block(plan, 0, a, b, s, init);
            for (std::size_t j = 1; j <= 4; ++j) CHECK(res.boundary_out[j - 1] == dp.cell(2, j));
        }
    }

    SUBCASE("dimension mismatch rejected") {
        Sequence a = encode_sequence("ACGT"), b = encode_sequence("ACGT");
        BlockPlan plan = plan_blocks(4, 4, 2);
        std::vector<int32_t> wrong(3, 0);
        CHECK_THROWS_AS(run_block(plan, 0, a, b, s, wrong), InputError);
    }
}

TEST_CASE("traffic tallies") {
    ScoringScheme s{1, -1, -2};
    std::mt19937_64 rng(11);

    SUBCASE("n=4 m=4 p=2 full run") {
        Sequence r = encode_sequence("ACGT"), q = encode_sequence("TGCA");
        WavefrontResult res = wavefront_score(q, r, s, 2);
        CHECK(res.trace.boundary_writes == 4);  // (ceil(4/2)-1)*4
        CHECK(res.trace.boundary_reads == 4);
        CHECK(res.trace.cell_updates == 16);
    }
    SUBCASE("single block spills nothing") {
        Sequence r = encode_sequence(oracle::random_dna(rng, 16));
        Sequence q = encode_sequence(oracle::random_dna(rng, 100));
        WavefrontResult res = wavefront_score(q, r, s, 16);
        CHECK(res.trace.boundary_writes == 0);
        CHECK(res.trace.boundary_reads == 0);
    }
    SUBCASE("closed form for random shapes") {
        for (int it = 0; it < 50; ++it) {
            uint64_t n = 1 + rng() % 60, m = 1 + rng() % 60;
            uint32_t p = 1 + rng() % 20;
            Sequence r = encode_sequence(oracle::random_dna(rng, n));
            Sequence q = encode_sequence(oracle::random_dna(rng, m));
            WavefrontResult res = wavefront_score(q, r, s, p);
            uint64_t blocks = (n + p - 1) / p;
            CHECK(res.trace.boundary_reads == (blocks - 1) * m);
            CHECK(res.trace.boundary_writes == (blocks - 1) * m);
            CHECK(res.trace.blocked_seq_char_reads == n);  // clamped: real characters only
            CHECK(res.trace.streamed_seq_char_reads == blocks * m);
            CHECK(res.trace.cell_updates == n * m);
        }
    }
}

TEST_CASE("p-invariance and oracle agreement") {
    std::mt19937_64 rng(12);
    ScoringScheme s{1, -1, -2};
    CHECK(wavefront_score(encode_sequence("ACGT"), encode_sequence("ACGT"), s, 2).score == 4);

    for (int it = 0; it < 500; ++it) {
        ScoringScheme sc = oracle::random_scheme(rng);
        Sequence r = encode_sequence(oracle::random_dna(rng, rng() % 48));
        Sequence q = encode_sequence(oracle::random_dna(rng, rng() % 48));
        int32_t golden = nw_score(r, q, sc);
        for (uint32_t p : {1u, 2u, 3u, 16u}) {
            WavefrontResult res = wavefront_score(q, r, sc, p);
            CHECK(res.score == golden);
        }
    }
}

TEST_CASE("blocked-role flag only swaps which sequence streams") {
    std::mt19937_64 rng(13);
    ScoringScheme s{1, -1, -2};
    for (int it = 0; it < 50; ++it) {
        Sequence r = encode_sequence(oracle::random_dna(rng, 1 + rng() % 30));
        Sequence q = encode_sequence(oracle::random_dna(rng, 1 + rng() % 30));
        CHECK(wavefront_score(q, r, s, 4, BlockedRole::Reference).score ==
              wavefront_score(q, r, s, 4, BlockedRole::Query).score);
    }
}

TEST_CASE("empty inputs") {
    ScoringScheme s{1, -1, -2};
    Sequence e = encode_sequence(""), a = encode_sequence("ACG");
    CHECK(wavefront_score(e, a, s, 4).score == -6);  // empty query, n*gap
    CHECK(wavefront_score(a, e, s, 4).score == -6);  // empty reference, m*gap
    CHECK(wavefront_score(e, e, s, 4).score == 0);
}

TEST_CASE("live storage stays O(p + m)") {
    ScoringScheme s{1, -1, -2};
    std::mt19937_64 rng(14);
    Sequence r = encode_sequence(oracle::random_dna(rng, 600));
    Sequence q = encode_sequence(oracle::random_dna(rng, 40));
    WavefrontResult res = wavefront_score(q, r, s, 8);
    CHECK(res.peak_live_cells <= 4 * (8 + 40) + 8);
    CHECK(res.peak_live_cells < 600 * 40 / 4);
}

TEST_CASE("wavefront legality: dependencies computed first") {
    ScoringScheme s{1, -1, -2};
    std::mt19937_64 rng(15);
    for (int it = 0; it < 10; ++it) {
        uint64_t n = 1 + rng() % 12, m = 1 + rng() % 12;
        uint32_t p = 1 + rng() % 5;
        Sequence r = encode_sequence(oracle::random_dna(rng, n));
        Sequence q = encode_sequence(oracle::random_dna(rng, m));
        std::map<std::pair<uint64_t, uint64_t>, uint64_t> order;
        uint64_t counter = 0;
        auto obs = [&](uint64_t row, uint64_t col) { order[{row, col}] = counter++; };
        wavefront_score(q, r, s, p, BlockedRole::Reference, obs);
        REQUIRE(order.size() == n * m);
        auto before = [&](uint64_t ri, uint64_t ci, uint64_t rj, uint64_t cj) {
            // row/col 0 are analytic, always "available".
            if (ri == 0 || ci == 0) return true;
            return order.at({ri, ci}) < order.at({rj, cj});
        };
        for (auto& [cell, _] : order) {
            auto [row, col] = cell;
            CHECK(before(row - 1, col, row, col));
            CHECK(before(row, col - 1, row, col));
            CHECK(before(row - 1, col - 1, row, col));
        }
    }
}
