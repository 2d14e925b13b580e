#include "bmat/sudoku.hpp"

#include "bmat/errors.hpp"
#include "bmat/generators.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace bmat {

std::string SudokuViolation::describe() const {
    const char* what = kind == Kind::row ? "row" : kind == Kind::column ? "column" : "block";
    return std::string(what) + " " + std::to_string(index) + " repeats value " + std::to_string(value);
}

std::optional<SudokuViolation> find_sudoku_violation(std::size_t n, std::span<const int> cells) {
    const std::size_t side = n * n;
    if (n == 0 || cells.size() != side * side)
        throw StructuralError("a Sudoku grid of order " + std::to_string(n) + " needs " +
                              std::to_string(side * side) + " cells");
    for (std::size_t idx = 0; idx < cells.size(); ++idx)
        if (cells[idx] < 1 || static_cast<std::size_t>(cells[idx]) > side)
            throw StructuralError("cell (" + std::to_string(idx / side + 1) + "," + std::to_string(idx % side + 1) +
                                  ") = " + std::to_string(cells[idx]) + " outside 1.." + std::to_string(side));

    using Kind = SudokuViolation::Kind;
    auto scan = [&](Kind kind, auto cell_of) -> std::optional<SudokuViolation> {
        for (std::size_t g = 0; g < side; ++g) {
            std::vector<bool> seen(side + 1, false);
            for (std::size_t m = 0; m < side; ++m) {
                const int v = cell_of(g, m);
                if (seen[static_cast<std::size_t>(v)]) return SudokuViolation{kind, g + 1, v};
                seen[static_cast<std::size_t>(v)] = true;
            }
        }
        return std::nullopt;
    };
    if (auto v = scan(Kind::row, [&](std::size_t r, std::size_t m) { return cells[r * side + m]; })) return v;
    if (auto v = scan(Kind::column, [&](std::size_t c, std::size_t m) { return cells[m * side + c]; })) return v;
    return scan(Kind::block, [&](std::size_t b, std::size_t m) {
        const std::size_t row = (b / n) * n + m / n;
        const std::size_t col = (b % n) * n + m % n;
        return cells[row * side + col];
    });
}

bool is_sudoku(std::size_t n, std::span<const int> cells) { return !find_sudoku_violation(n, cells); }

SudokuMatrix::SudokuMatrix(std::size_t n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
    if (auto v = find_sudoku_violation(n_, cells_)) throw SudokuError(*v);
}

OverlapError::OverlapError(std::size_t first, std::size_t second)
    : std::invalid_argument("parts " + std::to_string(first) + " and " + std::to_string(second) +
                            " are not disjoint"),
      first_(first),
      second_(second) {}

SudokuMatrix compose(std::span<const SPermutationMatrix> parts) {
    if (parts.empty()) throw StructuralError("compose needs at least one part");
    const std::size_t n = parts.front().order();
    const std::size_t side = n * n;
    if (parts.size() != side)
        throw StructuralError("compose needs exactly " + std::to_string(side) + " parts of order " +
                              std::to_string(n) + ", got " + std::to_string(parts.size()));
    for (std::size_t v = 0; v < parts.size(); ++v)
        if (parts[v].order() != n)
            throw StructuralError("part " + std::to_string(v + 1) + " has order " +
                                  std::to_string(parts[v].order()) + ", expected " + std::to_string(n));
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            if (!are_disjoint_sigma(parts[a], parts[b])) throw OverlapError(a + 1, b + 1);

    std::vector<int> cells(side * side, 0);
    for (std::size_t v = 0; v < side; ++v)
        for (std::size_t r = 0; r < side; ++r)
            cells[r * side + static_cast<std::size_t>(parts[v].column(r + 1) - 1)] = static_cast<int>(v + 1);
    return SudokuMatrix(n, std::move(cells));
}

std::vector<SPermutationMatrix> decompose(const SudokuMatrix& s) {
    const std::size_t side = s.side();
    std::vector<std::vector<int>> cols(side, std::vector<int>(side, 0));
    for (std::size_t r = 1; r <= side; ++r)
        for (std::size_t c = 1; c <= side; ++c)
            cols[static_cast<std::size_t>(s.at(r, c) - 1)][r - 1] = static_cast<int>(c);
    std::vector<SPermutationMatrix> parts;
    parts.reserve(side);
    for (auto& c : cols) parts.emplace_back(s.order(), std::move(c));
    return parts;
}

namespace {

std::vector<SPermutationMatrix> all_s_permutations(std::size_t n) {
    std::vector<SPermutationMatrix> all;
    BijectiveStream stream(n);
    while (auto m = stream.next()) all.push_back(std::move(*m));
    return all;
}

void check_sudoku_guard(std::size_t n, std::size_t max_n) {
    if (n == 0) throw StructuralError("Sudoku enumeration requires n >= 1");
    if (n > max_n)
        throw GuardError("Sudoku enumeration: n = " + std::to_string(n) + " exceeds the size guard n <= " +
                         std::to_string(max_n) + " (|Σ| = " + to_decimal(pi_cardinality(n)) +
                         " candidates per level); use --force to override");
}

// Extends a partial family chosen[0..depth) with candidates disjoint from all of it.
struct FamilySearch {
    const std::vector<SPermutationMatrix>& candidates;
    std::size_t side;
    const std::function<void(const SudokuMatrix&)>* visit;
    std::vector<std::size_t> chosen;
    BigCount count = 0;

    void run() {
        if (chosen.size() == side) {
            ++count;
            if (visit && *visit) {
                std::vector<SPermutationMatrix> parts;
                for (auto i : chosen) parts.push_back(candidates[i]);
                (*visit)(compose(parts));
            }
            return;
        }
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t prev) {
                return are_disjoint_sigma(candidates[prev], candidates[c]);
            });
            if (!fits) continue;
            chosen.push_back(c);
            run();
            chosen.pop_back();
        }
    }
};

}  // namespace

BigCount enumerate_sudoku(std::size_t n, const std::function<void(const SudokuMatrix&)>& visit, std::size_t max_n) {
    check_sudoku_guard(n, max_n);
    const auto candidates = all_s_permutations(n);
    FamilySearch search{candidates, n * n, &visit, {}, 0};
    search.run();
    return search.count;
}

BigCount enumerate_sudoku_sharded(std::size_t n, unsigned threads, std::size_t max_n) {
    check_sudoku_guard(n, max_n);
    const auto candidates = all_s_permutations(n);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    BigCount total = 0;
    {
        std::vector<std::jthread> pool;
        const unsigned workers = std::max(1u, threads);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t first; (first = next.fetch_add(1)) < candidates.size();) {
                    FamilySearch search{candidates, n * n, nullptr, {first}, 0};
                    search.run();
                    std::lock_guard lock(mu);
                    total += search.count;
                }
            });
    }
    return total;
}

}  // namespace bmat
