#include "pimalign/nw.hpp"

#include <algorithm>

namespace pimalign {

namespace {

// Shared by fill and score so the tie-break order has one definition.
inline void best_of_three(int32_t diag, int32_t up, int32_t left, int32_t& out, Pointer& ptr) {
    out = diag;
    ptr = Pointer::Diag;
    if (up > out) {
        out = up;
        ptr = Pointer::Up;
    }
    if (left > out) {
        out = left;
        ptr = Pointer::Left;
    }
}

} // namespace

DpMatrix nw_fill(const Sequence& a, const Sequence& b, const ScoringScheme& scheme,
                 std::size_t max_cells) {
    const std::size_t m = a.length, n = b.length;
    if (m != 0 && n != 0 && m > max_cells / n)
        throw SizeCapError("DP matrix of " + std::to_string(m) + "x" + std::to_string(n) +
                           " cells exceeds the cap of " + std::to_string(max_cells));

    DpMatrix dp(m + 1, n + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        dp.cell(i, 0) = static_cast<int32_t>(i) * scheme.gap;
        dp.pointer(i, 0) = Pointer::Up;
    }
    for (std::size_t j = 1; j <= n; ++j) {
        dp.cell(0, j) = static_cast<int32_t>(j) * scheme.gap;
        dp.pointer(0, j) = Pointer::Left;
    }
    for (std::size_t i = 1; i <= m; ++i) {
        const uint8_t ca = a.code_at(i - 1);
        for (std::size_t j = 1; j <= n; ++j) {
            int32_t v;
            Pointer p;
            best_of_three(dp.cell(i - 1, j - 1) + score_pair(ca, b.code_at(j - 1), scheme),
                          dp.cell(i - 1, j) + scheme.gap, dp.cell(i, j - 1) + scheme.gap, v, p);
            dp.cell(i, j) = v;
            dp.pointer(i, j) = p;
        }
    }
    return dp;
}

int32_t nw_score(const Sequence& a, const Sequence& b, const ScoringScheme& scheme) {
    const std::size_t m = a.length, n = b.length;
    std::vector<int32_t> prev(n + 1), cur(n + 1);
    for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<int32_t>(j) * scheme.gap;
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = static_cast<int32_t>(i) * scheme.gap;
        const uint8_t ca = a.code_at(i - 1);
        for (std::size_t j = 1; j <= n; ++j) {
            int32_t v;
            Pointer p;
            best_of_three(prev[j - 1] + score_pair(ca, b.code_at(j - 1), scheme),
                          prev[j] + scheme.gap, cur[j - 1] + scheme.gap, v, p);
            cur[j] = v;
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

Alignment traceback(const DpMatrix& dp, const Sequence& a, const Sequence& b,
                    const ScoringScheme& /*scheme*/) {
    std::size_t i = dp.rows() - 1, j = dp.cols() - 1;
    Alignment out;
    out.score = dp.cell(i, j);
    std::string ra, rb;
    while (i > 0 || j > 0) {
        switch (i == 0 ? Pointer::Left : j == 0 ? Pointer::Up : dp.pointer(i, j)) {
            case Pointer::Diag:
                ra.push_back(code_to_char(a.code_at(i - 1)));
                rb.push_back(code_to_char(b.code_at(j - 1)));
                --i;
                --j;
                break;
            case Pointer::Up:
                ra.push_back(code_to_char(a.code_at(i - 1)));
                rb.push_back('-');
                --i;
                break;
            case Pointer::Left:
                ra.push_back('-');
                rb.push_back(code_to_char(b.code_at(j - 1)));
                --j;
                break;
        }
    }
    out.aligned_a.assign(ra.rbegin(), ra.rend());
    out.aligned_b.assign(rb.rbegin(), rb.rend());
    return out;
}

} // namespace pimalign
