#include <doctest.h>

#include "bmat/errors.hpp"
#include "bmat/generators.hpp"
#include "bmat/io.hpp"

#include <random>

using namespace bmat;

TEST_CASE("bm01") {
    const auto m = BinaryMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    CHECK(io::to_bm01(m) == "3\n100\n001\n010\n");
    CHECK(io::parse_bm01("3\n100\n001\n010\n") == m);
    CHECK(io::parse_bm01_all("1\n1\n2\n01\n10\n").size() == 2);

    auto line_col = [](std::string_view text) -> std::pair<std::size_t, std::size_t> {
        try {
            io::parse_bm01(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(line_col("2\n10\n0x\n") == std::pair<std::size_t, std::size_t>{3, 2});
    CHECK(line_col("2\n10\n011\n") == std::pair<std::size_t, std::size_t>{3, 0});
    CHECK(line_col("2\n10\n") == std::pair<std::size_t, std::size_t>{3, 0});
    CHECK(line_col("2\n10\n01") == std::pair<std::size_t, std::size_t>{3, 0});
    CHECK(line_col("2 \n10\n01\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(line_col("2\n10\n01\n1\n") == std::pair<std::size_t, std::size_t>{4, 0});
    CHECK_THROWS_AS(io::parse_bm01("0\n"), ParseError);
}

TEST_CASE("pim") {
    const PiMatrix p(2, {1, 2, 2, 1, 1, 2, 2, 1});
    CHECK(io::to_pim(p) == "2\n1 2\n2 1\n1 2\n2 1\n");
    CHECK(io::parse_pim(io::to_pim(p)) == p);
    CHECK_THROWS_AS(io::parse_pim("2\n1 1\n2 1\n1 2\n2 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_pim("2\n1 2\n2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(io::parse_pim("2\n1  2\n2 1\n1 2\n2 1\n"), ParseError);
    CHECK_THROWS_AS(io::parse_pim("2\n1 3\n2 1\n1 2\n2 1\n"), ParseError);
}

TEST_CASE("spm") {
    const SPermutationMatrix a(2, {1, 3, 2, 4});
    CHECK(io::to_spm(a) == "2\n1 3 2 4\n");
    CHECK(io::parse_spm("2\n1 3 2 4\n") == a);
    CHECK(io::parse_spm_all("2\n1 3 2 4\n4 2 3 1\n").size() == 2);
    CHECK_THROWS_AS(io::parse_spm("2\n1 2 3 4\n"), ParseError);  // not block-valid
    CHECK_THROWS_AS(io::parse_spm("2\n1 3 2 4\n4 2 3 1\n"), ParseError);
}

TEST_CASE("sdk") {
    const std::string text = "2\n1 2 3 4\n3 4 1 2\n2 1 4 3\n4 3 2 1\n";
    const auto g = io::parse_sdk(text);
    CHECK(g.n == 2);
    CHECK(io::to_sdk(SudokuMatrix(g.n, g.cells)) == text);
    // Shape-valid but not a Sudoku: parse succeeds, the Latin check is separate.
    CHECK_NOTHROW(io::parse_sdk("2\n1 1 3 4\n3 4 1 2\n2 1 4 3\n4 3 2 1\n"));
    try {
        io::parse_sdk("2\n1 2 3 4\n3 4 9 2\n2 1 4 3\n4 3 2 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("serialization roundtrips on generated streams") {
    std::mt19937_64 rng(17);
    for (std::size_t n : {1u, 2u, 3u, 4u}) {
        for (int i = 0; i < 20; ++i) {
            const auto p = random_pi_matrix(n, rng);
            const auto a = phi(p);
            CHECK(io::parse_pim(io::to_pim(p)) == p);
            CHECK(io::parse_spm(io::to_spm(a)) == a);
            CHECK(io::parse_bm01(io::to_bm01(a.to_dense())) == a.to_dense());
        }
    }
}
