#pragma once

#include "bmat/big_count.hpp"
#include "bmat/s_permutation.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmat {

/// n²×n² grid over 1..n² in which every row, column and n×n block holds each value once.
class SudokuMatrix {
public:
    /// Throws SudokuViolation (naming the broken constraint) or StructuralError.
    SudokuMatrix(std::size_t n, std::vector<int> cells);

    std::size_t order() const noexcept { return n_; }
    std::size_t side() const noexcept { return n_ * n_; }
    /// 1-based cell access.
    int at(std::size_t i, std::size_t j) const { return cells_.at((i - 1) * side() + (j - 1)); }
    std::span<const int> cells() const noexcept { return cells_; }

    friend bool operator==(const SudokuMatrix&, const SudokuMatrix&) = default;
    friend auto operator<=>(const SudokuMatrix&, const SudokuMatrix&) = default;

private:
    std::size_t n_;
    std::vector<int> cells_;
};

/// Where a Latin constraint fails. index is the 1-based row, column or block
/// number (blocks counted row-major); value is the duplicated digit.
struct SudokuViolation {
    enum class Kind { row, column, block };
    Kind kind;
    std::size_t index;
    int value;

    std::string describe() const;
};

class SudokuError : public std::invalid_argument {
public:
    explicit SudokuError(SudokuViolation v) : std::invalid_argument(v.describe()), violation_(v) {}
    const SudokuViolation& violation() const noexcept { return violation_; }

private:
    SudokuViolation violation_;
};

/// First broken Latin constraint, or nullopt for a valid grid.
/// Throws StructuralError if the size is wrong or an entry lies outside 1..n².
std::optional<SudokuViolation> find_sudoku_violation(std::size_t n, std::span<const int> cells);

bool is_sudoku(std::size_t n, std::span<const int> cells);

/// Raised by compose for a non-disjoint pair; parts are reported 1-based.
class OverlapError : public std::invalid_argument {
public:
    OverlapError(std::size_t first, std::size_t second);
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// P = 1·A_1 + 2·A_2 + ... + n²·A_{n²}. Requires exactly n² pairwise-disjoint parts of one order.
SudokuMatrix compose(std::span<const SPermutationMatrix> parts);

/// A_v is the indicator of the cells holding v, returned in value order.
std::vector<SPermutationMatrix> decompose(const SudokuMatrix& s);

inline constexpr std::size_t kSudokuEnumerateMaxN = 2;

/// Depth-first search over ordered families (A_1, ..., A_{n²}) of pairwise-disjoint
/// S-permutation matrices; each complete family composes to one grid. Returns the
/// number of grids and hands each one to `visit` when given.
BigCount enumerate_sudoku(std::size_t n, const std::function<void(const SudokuMatrix&)>& visit = {},
                          std::size_t max_n = kSudokuEnumerateMaxN);

/// Same count, with the choice of A_1 split across worker threads.
BigCount enumerate_sudoku_sharded(std::size_t n, unsigned threads, std::size_t max_n = kSudokuEnumerateMaxN);

}  // namespace bmat
