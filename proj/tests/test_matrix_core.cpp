#include <doctest.h>

#include "bmat/binary_matrix.hpp"
#include "bmat/errors.hpp"
#include "bmat/permutation.hpp"
#include "bmat/s_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bmat;

namespace {

BinaryMatrix ones_at(std::size_t side, std::initializer_list<std::pair<int, int>> cells) {
    BinaryMatrix m(side);
    for (auto [i, j] : cells) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return m;
}

BinaryMatrix random_matrix(std::size_t side, std::mt19937_64& rng) {
    BinaryMatrix m(side);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 1; i <= side; ++i)
        for (std::size_t j = 1; j <= side; ++j) m.set(i, j, coin(rng));
    return m;
}

}  // namespace

TEST_CASE("BinaryMatrix basics") {
    BinaryMatrix m(70);  // spans two words per row
    CHECK(m.count_ones() == 0);
    m.set(3, 65);
    m.set(70, 70);
    CHECK(m.get(3, 65));
    CHECK_FALSE(m.get(3, 64));
    CHECK(m.row_sum(3) == 1);
    CHECK(m.col_sum(70) == 1);
    m.set(3, 65, false);
    CHECK(m.count_ones() == 1);

    CHECK_THROWS_AS(BinaryMatrix(0), StructuralError);
    CHECK_THROWS_AS(m.get(0, 1), StructuralError);
    CHECK_THROWS_AS(m.get(1, 71), StructuralError);
    CHECK_THROWS_AS(BinaryMatrix::from_rows({{1, 2}, {0, 0}}), StructuralError);
    CHECK_THROWS_AS(BinaryMatrix::from_rows({{1, 0}, {0}}), StructuralError);
}

TEST_CASE("is_lambda_matrix") {
    CHECK(is_lambda_matrix(BinaryMatrix::identity(3), 1));
    CHECK(is_lambda_matrix(BinaryMatrix::all_ones(3), 3));
    CHECK_FALSE(is_lambda_matrix(BinaryMatrix::from_rows({{1, 1}, {1, 0}}), 1));
    CHECK_FALSE(is_lambda_matrix(BinaryMatrix::identity(3), 2));
    CHECK_THROWS_AS(is_lambda_matrix(BinaryMatrix::identity(3), 0), StructuralError);
    CHECK_THROWS_AS(is_lambda_matrix(BinaryMatrix::identity(3), 4), StructuralError);
}

TEST_CASE("block_view") {
    const auto id4 = BinaryMatrix::identity(4);
    CHECK(block_view(id4, BlockIndex(1, 1, 2)) == BinaryMatrix::identity(2));
    CHECK(block_view(id4, BlockIndex(1, 2, 2)) == BinaryMatrix(2));
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t t = 1; t <= 3; ++t)
            CHECK(block_view(BinaryMatrix::all_ones(9), BlockIndex(s, t, 3)) == BinaryMatrix::all_ones(3));

    CHECK_THROWS_AS(block_view(BinaryMatrix::identity(5), BlockIndex(1, 1, 2)), StructuralError);
    CHECK_THROWS_AS(BlockIndex(0, 1, 2), StructuralError);
    CHECK_THROWS_AS(BlockIndex(1, 3, 2), StructuralError);
}

TEST_CASE("block_view reassembles the matrix") {
    std::mt19937_64 rng(7);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        const auto a = random_matrix(n * n, rng);
        BinaryMatrix rebuilt(n * n);
        for (std::size_t s = 1; s <= n; ++s)
            for (std::size_t t = 1; t <= n; ++t) {
                const auto blk = block_view(a, BlockIndex(s, t, n));
                for (std::size_t i = 1; i <= n; ++i)
                    for (std::size_t j = 1; j <= n; ++j)
                        if (blk.get(i, j)) rebuilt.set((s - 1) * n + i, (t - 1) * n + j);
            }
        CHECK(rebuilt == a);
    }
}

TEST_CASE("is_s_permutation") {
    CHECK(is_s_permutation(ones_at(4, {{1, 1}, {2, 3}, {3, 2}, {4, 4}})));
    CHECK_FALSE(is_s_permutation(BinaryMatrix::identity(4)));
    CHECK_FALSE(is_s_permutation(BinaryMatrix(4)));
    CHECK(is_s_permutation(BinaryMatrix::identity(1)));
    CHECK_THROWS_AS(is_s_permutation(BinaryMatrix::identity(5)), StructuralError);
}

TEST_CASE("exactly 16 of the 24 side-4 permutation matrices are S-permutation") {
    std::vector<int> p{1, 2, 3, 4};
    int total = 0, s_perm = 0;
    do {
        const auto m = permutation_to_matrix(Permutation(p));
        ++total;
        if (is_s_permutation(m)) {
            ++s_perm;
            CHECK(is_lambda_matrix(m, 1));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(total == 24);
    CHECK(s_perm == 16);
}

TEST_CASE("permutation_to_matrix") {
    CHECK(permutation_to_matrix(Permutation({1, 2, 3})) == BinaryMatrix::identity(3));
    CHECK(permutation_to_matrix(Permutation({2, 1})) == BinaryMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(permutation_to_matrix(Permutation({2, 3, 1})) == ones_at(3, {{1, 2}, {2, 3}, {3, 1}}));
    CHECK_THROWS_AS(Permutation({1, 1}), StructuralError);
    CHECK_THROWS_AS(Permutation({0, 1}), StructuralError);
    CHECK_THROWS_AS(Permutation({}), StructuralError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> v(1 + trial % 12);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        CHECK(is_lambda_matrix(permutation_to_matrix(Permutation(v)), 1));
    }
}

TEST_CASE("SPermutationMatrix construction and dense conversion") {
    const SPermutationMatrix a(2, {1, 3, 2, 4});
    CHECK(a.to_dense() == ones_at(4, {{1, 1}, {2, 3}, {3, 2}, {4, 4}}));
    CHECK(SPermutationMatrix::from_dense(a.to_dense()) == a);
    CHECK(a.one_in_block(1, 2) == std::pair{2, 1});
    CHECK(a.one_in_block(2, 2) == std::pair{2, 2});
    CHECK(SPermutationMatrix(1, {1}).to_dense() == BinaryMatrix::identity(1));

    CHECK_THROWS_AS(SPermutationMatrix(2, {1, 2, 3, 4}), StructuralError);  // identity breaks blocks
    CHECK_THROWS_AS(SPermutationMatrix(2, {1, 3, 2}), StructuralError);
    CHECK_THROWS_AS(SPermutationMatrix::from_dense(BinaryMatrix::identity(4)), StructuralError);
}

TEST_CASE("are_disjoint_sigma") {
    const SPermutationMatrix a(2, {1, 3, 2, 4});
    const SPermutationMatrix b(2, {4, 2, 3, 1});
    CHECK(are_disjoint_sigma(a, b));
    CHECK(are_disjoint_sigma(b, a));
    CHECK_FALSE(are_disjoint_sigma(a, a));
    const SPermutationMatrix shares_first(2, {1, 4, 3, 2});
    CHECK_FALSE(are_disjoint_sigma(a, shares_first));
    CHECK_THROWS_AS(are_disjoint_sigma(a, SPermutationMatrix(1, {1})), StructuralError);
}
