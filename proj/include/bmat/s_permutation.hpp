#pragma once

#include "bmat/binary_matrix.hpp"

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace bmat {

/// Element of Σ_{n²}: an n²×n² binary matrix with exactly one 1 in every row,
/// column and n×n block, stored as the column of the 1 in each row (1-based).
class SPermutationMatrix {
public:
    /// Throws StructuralError unless column_of_row describes an S-permutation matrix of block order n.
    SPermutationMatrix(std::size_t n, std::vector<int> column_of_row);

    /// Throws StructuralError if the dense matrix is not S-permutation.
    static SPermutationMatrix from_dense(const BinaryMatrix& a);

    std::size_t order() const noexcept { return n_; }
    std::size_t side() const noexcept { return n_ * n_; }
    std::span<const int> column_of_row() const noexcept { return cols_; }
    /// Column of the 1 in 1-based row i.
    int column(std::size_t i) const { return cols_.at(i - 1); }

    /// Local (row, col) of the single 1 inside block (s, t), both 1-based.
    std::pair<int, int> one_in_block(std::size_t s, std::size_t t) const;

    BinaryMatrix to_dense() const;

    friend bool operator==(const SPermutationMatrix&, const SPermutationMatrix&) = default;
    friend auto operator<=>(const SPermutationMatrix&, const SPermutationMatrix&) = default;

private:
    struct Trusted {};
    SPermutationMatrix(Trusted, std::size_t n, std::vector<int> column_of_row) noexcept
        : n_(n), cols_(std::move(column_of_row)) {}
    friend class SPermutationBuilder;

    std::size_t n_;
    std::vector<int> cols_;
};

/// Checks the S-permutation invariants on a raw column vector without constructing.
bool is_s_permutation_columns(std::size_t n, std::span<const int> column_of_row);

/// No position carries a 1 in both matrices.
bool are_disjoint_sigma(const SPermutationMatrix& a, const SPermutationMatrix& b);

/// Construction path for generators whose output is correct by construction.
/// Skips validation; only code that can prove the invariants should use it.
class SPermutationBuilder {
public:
    static SPermutationMatrix assume_valid(std::size_t n, std::vector<int> column_of_row) noexcept {
        return SPermutationMatrix(SPermutationMatrix::Trusted{}, n, std::move(column_of_row));
    }
};

}  // namespace bmat
