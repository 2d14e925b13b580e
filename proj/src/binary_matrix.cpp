#include "bmat/binary_matrix.hpp"

#include "bmat/errors.hpp"

#include <bit>
#include <string>

namespace bmat {

namespace {

constexpr std::size_t kWordBits = 64;

}  // namespace

BinaryMatrix::BinaryMatrix(std::size_t side)
    : side_(side), words_per_row_((side + kWordBits - 1) / kWordBits), words_(side * words_per_row_, 0) {
    if (side == 0) throw StructuralError("matrix side must be positive");
}

BinaryMatrix BinaryMatrix::identity(std::size_t side) {
    BinaryMatrix m(side);
    for (std::size_t i = 1; i <= side; ++i) m.set(i, i);
    return m;
}

BinaryMatrix BinaryMatrix::all_ones(std::size_t side) {
    BinaryMatrix m(side);
    for (std::size_t i = 1; i <= side; ++i)
        for (std::size_t j = 1; j <= side; ++j) m.set(i, j);
    return m;
}

BinaryMatrix BinaryMatrix::from_values(std::size_t side, std::span<const int> values) {
    BinaryMatrix m(side);
    if (values.size() != side * side)
        throw StructuralError("expected " + std::to_string(side * side) + " entries, got " +
                              std::to_string(values.size()));
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
        const int v = values[idx];
        if (v != 0 && v != 1) throw StructuralError("binary matrix entry must be 0 or 1");
        if (v) m.set(idx / side + 1, idx % side + 1);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<int> flat;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw StructuralError("rows must all have length equal to the row count");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_values(rows.size(), flat);
}

void BinaryMatrix::check_index(std::size_t row, std::size_t col) const {
    if (row < 1 || row > side_ || col < 1 || col > side_)
        throw StructuralError("index (" + std::to_string(row) + "," + std::to_string(col) +
                              ") outside 1.." + std::to_string(side_));
}

bool BinaryMatrix::get(std::size_t row, std::size_t col) const {
    check_index(row, col);
    const std::size_t c = col - 1;
    return (words_[(row - 1) * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BinaryMatrix::set(std::size_t row, std::size_t col, bool value) {
    check_index(row, col);
    const std::size_t c = col - 1;
    auto& w = words_[(row - 1) * words_per_row_ + c / kWordBits];
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
}

std::size_t BinaryMatrix::row_sum(std::size_t row) const {
    check_index(row, 1);
    std::size_t sum = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w)
        sum += static_cast<std::size_t>(std::popcount(words_[(row - 1) * words_per_row_ + w]));
    return sum;
}

std::size_t BinaryMatrix::col_sum(std::size_t col) const {
    check_index(1, col);
    std::size_t sum = 0;
    for (std::size_t i = 1; i <= side_; ++i) sum += get(i, col) ? 1 : 0;
    return sum;
}

std::size_t BinaryMatrix::count_ones() const {
    std::size_t sum = 0;
    for (auto w : words_) sum += static_cast<std::size_t>(std::popcount(w));
    return sum;
}

BlockIndex::BlockIndex(std::size_t s_, std::size_t t_, std::size_t n_) : s(s_), t(t_), n(n_) {
    if (n == 0 || s < 1 || s > n || t < 1 || t > n)
        throw StructuralError("block index (" + std::to_string(s) + "," + std::to_string(t) +
                              ") outside 1.." + std::to_string(n));
}

std::size_t block_order_of(std::size_t side) {
    std::size_t n = 1;
    while (n * n < side) ++n;
    if (n * n != side) throw StructuralError("side " + std::to_string(side) + " is not a perfect square");
    return n;
}

bool is_lambda_matrix(const BinaryMatrix& m, std::size_t k) {
    if (k < 1 || k > m.side())
        throw StructuralError("k must lie in 1.." + std::to_string(m.side()));
    for (std::size_t i = 1; i <= m.side(); ++i)
        if (m.row_sum(i) != k || m.col_sum(i) != k) return false;
    return true;
}

BinaryMatrix block_view(const BinaryMatrix& a, const BlockIndex& b) {
    if (a.side() != b.n * b.n)
        throw StructuralError("side " + std::to_string(a.side()) + " is not " + std::to_string(b.n) + "²");
    BinaryMatrix out(b.n);
    const std::size_t row0 = (b.s - 1) * b.n;
    const std::size_t col0 = (b.t - 1) * b.n;
    for (std::size_t i = 1; i <= b.n; ++i)
        for (std::size_t j = 1; j <= b.n; ++j)
            if (a.get(row0 + i, col0 + j)) out.set(i, j);
    return out;
}

bool is_s_permutation(const BinaryMatrix& a) {
    const std::size_t n = block_order_of(a.side());
    for (std::size_t i = 1; i <= a.side(); ++i)
        if (a.row_sum(i) != 1 || a.col_sum(i) != 1) return false;
    for (std::size_t s = 1; s <= n; ++s)
        for (std::size_t t = 1; t <= n; ++t)
            if (block_view(a, BlockIndex(s, t, n)).count_ones() != 1) return false;
    return true;
}

}  // namespace bmat
