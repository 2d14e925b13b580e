#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bmat {

/// Dense square 0/1 matrix stored as packed 64-bit words, one run of words per row.
/// Indices in the public interface are 1-based.
class BinaryMatrix {
public:
    /// Zero matrix of the given side. Side 0 is rejected.
    explicit BinaryMatrix(std::size_t side);

    static BinaryMatrix identity(std::size_t side);
    static BinaryMatrix all_ones(std::size_t side);
    /// Builds from row-major values; every value must be 0 or 1 and the count must be side².
    static BinaryMatrix from_values(std::size_t side, std::span<const int> values);
    static BinaryMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t side() const noexcept { return side_; }

    bool get(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, bool value = true);

    std::size_t row_sum(std::size_t row) const;
    std::size_t col_sum(std::size_t col) const;
    std::size_t count_ones() const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    void check_index(std::size_t row, std::size_t col) const;

    std::size_t side_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> words_;
};

/// Coordinates (s, t) of one n×n block inside an n²×n² matrix.
struct BlockIndex {
    std::size_t s;
    std::size_t t;
    std::size_t n;

    BlockIndex(std::size_t s, std::size_t t, std::size_t n);
};

/// Returns n such that n*n == side, or throws StructuralError.
std::size_t block_order_of(std::size_t side);

bool is_lambda_matrix(const BinaryMatrix& m, std::size_t k);

/// Copy of block A_st: rows (s-1)n+1..sn, columns (t-1)n+1..tn.
BinaryMatrix block_view(const BinaryMatrix& a, const BlockIndex& b);

bool is_s_permutation(const BinaryMatrix& a);

}  // namespace bmat
