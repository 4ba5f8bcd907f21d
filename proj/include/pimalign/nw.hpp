#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pimalign/scoring.hpp"
#include "pimalign/sequence.hpp"

namespace pimalign {

// Which of the three candidates won a cell. Ties resolve Diag, then Up
// (gap in b), then Left (gap in a), so traceback is deterministic.
enum class Pointer : uint8_t { Diag, Up, Left };

// Full (len_a+1) x (len_b+1) score grid with backward pointers. Rows follow
// sequence a, columns sequence b.
class DpMatrix {
public:
    DpMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols, 0), ptrs_(rows * cols, Pointer::Diag) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int32_t cell(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    int32_t& cell(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }

    Pointer pointer(std::size_t i, std::size_t j) const { return ptrs_[i * cols_ + j]; }
    Pointer& pointer(std::size_t i, std::size_t j) { return ptrs_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<int32_t> cells_;
    std::vector<Pointer> ptrs_;
};

// '-' marks a gap. Stripping gaps recovers the inputs; per-column scores sum
// to `score`.
struct Alignment {
    std::string aligned_a;
    std::string aligned_b;
    int32_t score = 0;
};

inline constexpr std::size_t kDefaultMatrixCellCap = std::size_t{1} << 26;

DpMatrix nw_fill(const Sequence& a, const Sequence& b, const ScoringScheme& scheme,
                 std::size_t max_cells = kDefaultMatrixCellCap);

// Corner score only, two-row storage. Bit-identical to nw_fill's corner cell.
int32_t nw_score(const Sequence& a, const Sequence& b, const ScoringScheme& scheme);

Alignment traceback(const DpMatrix& dp, const Sequence& a, const Sequence& b,
                    const ScoringScheme& scheme);

} // namespace pimalign
