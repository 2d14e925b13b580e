// Acceptance suite: one PASS/FAIL line per criterion; exit status is the number of failures.

#include "bmat/cli.hpp"
#include "bmat/generators.hpp"
#include "bmat/lambda_count.hpp"
#include "bmat/pi_matrix.hpp"
#include "bmat/sudoku.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace bmat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> body;  // fills detail
};

constexpr std::uint64_t kSudokuGrids2 = 288;  // frozen from the exhaustive n=2 search
constexpr std::uint64_t kMu21 = 16;

bool ac1(std::string& detail) {
    const auto t0 = Clock::now();
    bool ok = lambda_k2_sum(1) == 0 && lambda_k2_sum(2) == 1 && lambda_k2_sum(3) == 6;
    for (unsigned n = 1; n <= 20; ++n) {
        const auto s = lambda_k2_sum(n);
        ok = ok && lambda_k2_anand(n) == s && lambda_k2_good(n) == s && lambda_k2_system(n) == s;
    }
    const double secs = seconds_since(t0);
    detail = "n=1..20 four-way agreement, " + std::to_string(secs) + " s (limit 1 s)";
    return ok && secs < 1.0;
}

bool ac2(std::string& detail) {
    const auto t0 = Clock::now();
    bool ok = true;
    for (unsigned n = 1; n <= 5; ++n) {
        for (unsigned k = 1; k <= std::min(n, 3u); ++k) {
            const BigCount brute = lambda_brute(n, k);
            BigCount formula = k == 1 ? lambda_k1(n) : k == 2 ? lambda_k2_sum(n) : lambda_k3_explicit(n);
            if (k == 2)
                ok = ok && lambda_k2_anand(n) == brute && lambda_k2_good(n) == brute && lambda_k2_system(n) == brute;
            ok = ok && formula == brute;
        }
    }
    ok = ok && lambda_brute(4, 2) == 90 && lambda_brute(5, 2) == 2040;
    const double secs = seconds_since(t0);
    detail = "n<=5, k in {1,2,3}; λ(4,2)=" + to_decimal(lambda_brute(4, 2)) + ", λ(5,2)=" +
             to_decimal(lambda_brute(5, 2)) + ", " + std::to_string(secs) + " s (limit 30 s)";
    return ok && secs < 30.0;
}

bool ac3(std::string& detail) {
    bool ok = lambda_k3_explicit(3) == 1;
    for (unsigned n = 3; n <= 5; ++n) ok = ok && lambda_k3_explicit(n) == lambda_brute(n, 3);
    for (unsigned n = 4; n <= 6; ++n) ok = ok && lambda_k3_explicit(n) == lambda_brute(n, n - 3);
    detail = "λ(3..5,3) = " + to_decimal(lambda_k3_explicit(3)) + ", " + to_decimal(lambda_k3_explicit(4)) + ", " +
             to_decimal(lambda_k3_explicit(5)) + "; complement symmetry n=4..6";
    return ok;
}

bool ac4(std::string& detail) {
    auto count_bij = [](std::size_t n) {
        BijectiveStream s(n);
        std::uint64_t c = 0;
        while (s.next()) ++c;
        return c;
    };
    const auto b2 = count_bij(2);
    const auto t0 = Clock::now();
    const auto b3 = count_bij(3);
    const double secs = seconds_since(t0);

    NaiveStream n2(2), n3(3);
    while (n2.next()) {
    }
    while (n3.next()) {
    }
    detail = "bijective " + std::to_string(b2) + "/" + std::to_string(b3) + ", naive candidates " +
             std::to_string(n2.candidates_examined()) + "/" + std::to_string(n3.candidates_examined()) +
             ", n=3 bijective " + std::to_string(secs) + " s (limit 5 s)";
    return b2 == 16 && b3 == 46656 && n2.candidates_examined() == 24 && n3.candidates_examined() == 362880 &&
           n2.survivors() == 16 && n3.survivors() == 46656 && secs < 5.0;
}

bool ac5(std::string& detail) {
    std::vector<PiMatrix> all;
    PiStream s(2);
    while (auto p = s.next()) all.push_back(*p);
    std::set<SPermutationMatrix> images;
    std::size_t roundtrips = 0, pairs = 0;
    for (const auto& p : all) {
        const auto a = phi(p);
        roundtrips += is_s_permutation(a.to_dense()) && phi_inverse(a) == p;
        images.insert(a);
    }
    for (const auto& p : all)
        for (const auto& q : all) pairs += are_disjoint_pi(p, q) == are_disjoint_sigma(phi(p), phi(q));
    detail = std::to_string(roundtrips) + "/16 roundtrips, " + std::to_string(images.size()) + " distinct images, " +
             std::to_string(pairs) + "/256 pair equivalences";
    return all.size() == 16 && roundtrips == 16 && images.size() == 16 && pairs == 256;
}

bool ac6(std::string& detail) {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string sizes;
    for (std::size_t n : {2u, 3u}) {
        std::set<SPermutationMatrix> naive, bij;
        NaiveStream ns(n);
        while (auto m = ns.next()) naive.insert(*m);
        BijectiveStream bs(n);
        while (auto m = bs.next()) bij.insert(*m);
        ok = ok && naive == bij;
        sizes += "n=" + std::to_string(n) + ": " + std::to_string(naive.size()) + " = " + std::to_string(bij.size()) +
                 "; ";
    }
    const double secs = seconds_since(t0);
    detail = sizes + std::to_string(secs) + " s (limit 60 s)";
    return ok && secs < 60.0;
}

bool ac7(std::string& detail) {
    cli::BenchOptions opt;
    opt.n = 3;
    opt.repetitions = 3;
    const auto outcome = cli::cmd_bench(opt);
    std::string naive_ms, bij_ms;
    for (const auto& [k, v] : outcome.machine_report) {
        if (k == "naive_ms") naive_ms = v;
        if (k == "bijection_ms") bij_ms = v;
    }
    const bool faster = !naive_ms.empty() && !bij_ms.empty() && std::stod(bij_ms) < std::stod(naive_ms);

    bool increasing = true;
    std::string seq;
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto r = naive_overhead_ratio(n);
        seq += to_decimal(boost::multiprecision::numerator(r)) + "/" +
               to_decimal(boost::multiprecision::denominator(r)) + (n < 5 ? ", " : "");
        if (n > 1) increasing = increasing && naive_overhead_ratio(n - 1) < r;
    }
    detail = "bijective " + bij_ms + " ms vs naive " + naive_ms + " ms; ratios " + seq;
    return outcome.exit_code == 0 && faster && increasing;
}

bool ac8(std::string& detail) {
    const auto t0 = Clock::now();
    std::uint64_t roundtrips = 0, emitted = 0;
    const BigCount total = enumerate_sudoku(2, [&](const SudokuMatrix& s) {
        ++emitted;
        const auto parts = decompose(s);
        roundtrips += is_sudoku(2, s.cells()) && compose(parts) == s && decompose(compose(parts)) == parts;
    });
    const double secs = seconds_since(t0);
    detail = "grids " + to_decimal(total) + " (frozen " + std::to_string(kSudokuGrids2) + "), roundtrips " +
             std::to_string(roundtrips) + "/" + std::to_string(emitted) + ", " + std::to_string(secs) +
             " s (limit 60 s)";
    return total == kSudokuGrids2 && roundtrips == emitted && emitted == kSudokuGrids2 && secs < 60.0;
}

bool ac9(std::string& detail) {
    detail = "μ(1..3,1) = " + to_decimal(mu_k1(1)) + ", " + to_decimal(mu_k1(2)) + ", " + to_decimal(mu_k1(3)) +
             "; mu_brute(2,1) = " + to_decimal(mu_brute(2, 1));
    return mu_k1(1) == 1 && mu_k1(2) == 16 && mu_k1(3) == 46656 && mu_brute(2, 1) == kMu21;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "λ(n,2) four-way agreement", ac1},
        {2, "brute-force oracle agreement", ac2},
        {3, "λ(n,3) explicit sum", ac3},
        {4, "generator cardinalities", ac4},
        {5, "bijection and disjointness over Π_2", ac5},
        {6, "naive/bijective set equality", ac6},
        {7, "efficiency of bijective generation", ac7},
        {8, "Sudoku composition at n=2", ac8},
        {9, "μ(n,1)", ac9},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.title, detail.c_str());
        failures += ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures;
}
