#include "bmat/s_permutation.hpp"

#include "bmat/errors.hpp"
#include "bmat/permutation.hpp"

#include <string>

namespace bmat {

bool is_s_permutation_columns(std::size_t n, std::span<const int> cols) {
    const std::size_t side = n * n;
    if (n == 0 || cols.size() != side || !is_permutation_of_1_to_m(cols)) return false;
    // For each row band s, the column bands hit must be a permutation of 1..n.
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        for (std::size_t r = 0; r < n; ++r) {
            const auto band = static_cast<std::size_t>(cols[s * n + r] - 1) / n;
            if (seen[band]) return false;
            seen[band] = true;
        }
    }
    return true;
}

SPermutationMatrix::SPermutationMatrix(std::size_t n, std::vector<int> column_of_row)
    : n_(n), cols_(std::move(column_of_row)) {
    if (!is_s_permutation_columns(n_, cols_))
        throw StructuralError("column vector is not an S-permutation matrix of order " + std::to_string(n_));
}

SPermutationMatrix SPermutationMatrix::from_dense(const BinaryMatrix& a) {
    const std::size_t n = block_order_of(a.side());
    if (!is_s_permutation(a)) throw StructuralError("matrix is not S-permutation");
    std::vector<int> cols(a.side());
    for (std::size_t i = 1; i <= a.side(); ++i)
        for (std::size_t j = 1; j <= a.side(); ++j)
            if (a.get(i, j)) cols[i - 1] = static_cast<int>(j);
    return SPermutationBuilder::assume_valid(n, std::move(cols));
}

std::pair<int, int> SPermutationMatrix::one_in_block(std::size_t s, std::size_t t) const {
    const BlockIndex b(s, t, n_);
    for (std::size_t k = 1; k <= n_; ++k) {
        const int col = cols_[(b.s - 1) * n_ + k - 1];
        if (static_cast<std::size_t>(col - 1) / n_ == b.t - 1)
            return {static_cast<int>(k), col - static_cast<int>((b.t - 1) * n_)};
    }
    throw ConsistencyError("S-permutation matrix has an empty block");
}

BinaryMatrix SPermutationMatrix::to_dense() const {
    BinaryMatrix m(side());
    for (std::size_t i = 1; i <= side(); ++i) m.set(i, static_cast<std::size_t>(cols_[i - 1]));
    return m;
}

bool are_disjoint_sigma(const SPermutationMatrix& a, const SPermutationMatrix& b) {
    if (a.order() != b.order())
        throw StructuralError("cannot compare S-permutation matrices of orders " + std::to_string(a.order()) +
                              " and " + std::to_string(b.order()));
    const auto ca = a.column_of_row();
    const auto cb = b.column_of_row();
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] == cb[i]) return false;
    return true;
}

}  // namespace bmat
