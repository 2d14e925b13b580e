#include <doctest.h>

#include "bmat/errors.hpp"
#include "bmat/sudoku.hpp"

#include <set>

using namespace bmat;

namespace {

const std::vector<int> kGrid4 = {1, 2, 3, 4, 3, 4, 1, 2, 2, 1, 4, 3, 4, 3, 2, 1};

// Cell-by-cell backtracking over 4×4 grids, independent of the S-permutation machinery.
int count_4x4_grids(std::vector<int>& g, int cell) {
    if (cell == 16) return 1;
    int total = 0;
    const int r = cell / 4, c = cell % 4;
    for (int v = 1; v <= 4; ++v) {
        bool ok = true;
        for (int m = 0; m < 4 && ok; ++m) {
            const int br = (r / 2) * 2 + m / 2, bc = (c / 2) * 2 + m % 2;
            if ((m < c && g[r * 4 + m] == v) || (m < r && g[m * 4 + c] == v)) ok = false;
            if (br * 4 + bc < cell && g[br * 4 + bc] == v) ok = false;
        }
        if (!ok) continue;
        g[cell] = v;
        total += count_4x4_grids(g, cell + 1);
    }
    return total;
}

}  // namespace

TEST_CASE("is_sudoku") {
    CHECK(is_sudoku(2, kGrid4));
    CHECK(is_sudoku(1, std::vector<int>{1}));
    CHECK_FALSE(is_sudoku(2, std::vector<int>{1, 1, 3, 4, 3, 4, 1, 2, 2, 1, 4, 3, 4, 3, 2, 1}));
    CHECK_THROWS_AS(is_sudoku(2, std::vector<int>{5, 2, 3, 4, 3, 4, 1, 2, 2, 1, 4, 3, 4, 3, 2, 1}), StructuralError);
    CHECK_THROWS_AS(is_sudoku(2, std::vector<int>{1, 2, 3}), StructuralError);
}

TEST_CASE("violations name the constraint") {
    auto v = find_sudoku_violation(2, std::vector<int>{1, 1, 3, 4, 3, 4, 1, 2, 2, 1, 4, 3, 4, 3, 2, 1});
    REQUIRE(v);
    CHECK(v->kind == SudokuViolation::Kind::row);
    CHECK(v->index == 1);
    CHECK(v->value == 1);

    // Latin square that breaks only the blocks.
    v = find_sudoku_violation(2, std::vector<int>{1, 2, 3, 4, 2, 3, 4, 1, 3, 4, 1, 2, 4, 1, 2, 3});
    REQUIRE(v);
    CHECK(v->kind == SudokuViolation::Kind::block);
    CHECK(v->describe() == "block 1 repeats value 2");
    CHECK_THROWS_AS(SudokuMatrix(2, {1, 2, 3, 4, 2, 3, 4, 1, 3, 4, 1, 2, 4, 1, 2, 3}), SudokuError);
}

TEST_CASE("decompose and compose") {
    const SudokuMatrix s(2, kGrid4);
    const auto parts = decompose(s);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0] == SPermutationMatrix(2, {1, 3, 2, 4}));
    for (std::size_t a = 0; a < 4; ++a) {
        CHECK(is_s_permutation(parts[a].to_dense()));
        for (std::size_t b = a + 1; b < 4; ++b) CHECK(are_disjoint_sigma(parts[a], parts[b]));
    }
    CHECK(compose(parts) == s);
    CHECK(decompose(compose(parts)) == parts);

    const SudokuMatrix one(1, {1});
    CHECK(decompose(one) == std::vector{SPermutationMatrix(1, {1})});
    CHECK(compose(std::vector{SPermutationMatrix(1, {1})}) == one);
}

TEST_CASE("compose rejections") {
    const auto parts = decompose(SudokuMatrix(2, kGrid4));
    std::vector<SPermutationMatrix> dup = {parts[0], parts[1], parts[1], parts[3]};
    try {
        compose(dup);
        FAIL("expected OverlapError");
    } catch (const OverlapError& e) {
        CHECK(e.first() == 2);
        CHECK(e.second() == 3);
    }
    CHECK_THROWS_AS(compose(std::vector(parts.begin(), parts.begin() + 3)), StructuralError);
    std::vector<SPermutationMatrix> mixed = {parts[0], parts[1], parts[2], SPermutationMatrix(1, {1})};
    CHECK_THROWS_AS(compose(mixed), StructuralError);
}

TEST_CASE("enumerate_sudoku") {
    CHECK(enumerate_sudoku(1) == 1);

    std::vector<int> scratch(16, 0);
    const int oracle = count_4x4_grids(scratch, 0);
    CHECK(oracle == 288);

    std::set<SudokuMatrix> grids;
    const auto count = enumerate_sudoku(2, [&](const SudokuMatrix& s) {
        CHECK(is_sudoku(2, s.cells()));
        CHECK(compose(decompose(s)) == s);
        grids.insert(s);
    });
    CHECK(count == 288);
    CHECK(grids.size() == 288);
    CHECK(enumerate_sudoku_sharded(2, 4) == 288);
    CHECK(enumerate_sudoku_sharded(1, 2) == 1);
    CHECK_THROWS_AS(enumerate_sudoku(3), GuardError);
}
