#include "bmat/cli.hpp"

#include "bmat/errors.hpp"
#include "bmat/generators.hpp"
#include "bmat/io.hpp"
#include "bmat/lambda_count.hpp"
#include "bmat/pi_matrix.hpp"
#include "bmat/sudoku.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <thread>

namespace bmat::cli {

std::string CommandOutcome::render(bool machine) const {
    if (!machine) return report;
    std::string s;
    for (const auto& [k, v] : machine_report) s += k + '=' + v + '\n';
    s += "exit_code=" + std::to_string(exit_code) + '\n';
    return s;
}

namespace {

CommandOutcome usage_error(CommandOutcome out, const std::string& msg) {
    out.exit_code = kUsage;
    out.line("error: " + msg);
    out.fact("error", msg);
    return out;
}

CommandOutcome check_failed(CommandOutcome out, const std::string& msg) {
    out.exit_code = kCheckFailed;
    out.line("FAILED: " + msg);
    out.fact("failed", msg);
    return out;
}

BigCount binomial(unsigned n, unsigned k) {
    BigCount r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string ratio_text(const BigCount& num, const BigCount& den) {
    const BigRational r(num, den);
    return to_decimal(num) + "/" + to_decimal(den) + " = " + to_decimal(boost::multiprecision::numerator(r)) + "/" +
           to_decimal(boost::multiprecision::denominator(r));
}

unsigned hardware_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

// ---------------------------------------------------------------- count

CommandOutcome cmd_count(const CountOptions& opt) {
    CommandOutcome out;
    const unsigned n = opt.n, k = opt.k;
    if (n == 0) return usage_error(out, "--n must be positive");

    using Method = std::pair<std::string, std::function<BigCount()>>;
    std::vector<Method> formulas;
    unsigned brute_guard = 0;
    std::function<BigCount(unsigned)> brute;
    BigCount brute_estimate;

    if (opt.target == "lambda") {
        if (k < 1 || k > n) return usage_error(out, "--k must lie in 1..n for lambda");
        if (k == 1) formulas.emplace_back("factorial", [n] { return lambda_k1(n); });
        if (k == 2) {
            formulas.emplace_back("sum", [n] { return lambda_k2_sum(n); });
            formulas.emplace_back("anand", [n] { return lambda_k2_anand(n); });
            formulas.emplace_back("good", [n] { return lambda_k2_good(n); });
            formulas.emplace_back("system", [n] { return lambda_k2_system(n); });
        }
        if (k == 3) formulas.emplace_back("explicit", [n] { return lambda_k3_explicit(n); });
        brute_guard = kLambdaBruteMaxN;
        brute = [n, k](unsigned max_n) { return lambda_brute(n, k, max_n); };
        brute_estimate = boost::multiprecision::pow(binomial(n, k), n);
    } else if (opt.target == "mu") {
        if (k < 1 || k > n * n) return usage_error(out, "--k must lie in 1..n² for mu");
        if (k == 1) formulas.emplace_back("formula", [n] { return mu_k1(n); });
        brute_guard = kMuBruteMaxN;
        brute = [n, k](unsigned max_n) { return mu_brute(n, k, max_n); };
        brute_estimate = boost::multiprecision::pow(binomial(n * n, k), n * n);
    } else {
        return usage_error(out, "target must be 'lambda' or 'mu'");
    }

    const bool brute_allowed = n <= brute_guard || opt.force;
    std::vector<Method> chosen;
    auto brute_method = Method{"brute", [&] { return brute(opt.force ? std::max(n, brute_guard) : brute_guard); }};

    if (opt.method == "auto") {
        if (!formulas.empty()) chosen.push_back(formulas.front());
        else chosen.push_back(brute_method);
    } else if (opt.method == "all") {
        chosen = formulas;
        if (brute_allowed) chosen.push_back(brute_method);
        else out.fact("skipped", "brute");
    } else if (opt.method == "brute") {
        chosen.push_back(brute_method);
    } else {
        for (const auto& f : formulas)
            if (f.first == opt.method) chosen.push_back(f);
        if (chosen.empty()) {
            std::string valid;
            for (const auto& f : formulas) valid += f.first + ", ";
            return usage_error(out, "method '" + opt.method + "' is not available for " + opt.target +
                                        " with k=" + std::to_string(k) + "; choose one of " + valid +
                                        "brute, all");
        }
    }

    const bool runs_brute =
        std::any_of(chosen.begin(), chosen.end(), [](const Method& m) { return m.first == "brute"; });
    if (runs_brute && n > brute_guard) {
        if (!opt.force)
            return usage_error(out, "brute force for n = " + std::to_string(n) + " exceeds the guard n <= " +
                                        std::to_string(brute_guard) + "; pass --force to run anyway");
        out.line("estimate: up to " + to_decimal(brute_estimate) + " row combinations");
        out.fact("estimate", to_decimal(brute_estimate));
    }

    std::vector<std::pair<std::string, BigCount>> results;
    try {
        for (const auto& [name, fn] : chosen) results.emplace_back(name, fn());
    } catch (const GuardError& e) {
        return usage_error(out, e.what());
    } catch (const ConsistencyError& e) {
        return check_failed(out, e.what());
    }

    for (const auto& [name, v] : results) out.fact("method." + name, to_decimal(v));
    for (const auto& [name, v] : results) {
        if (v != results.front().second) {
            std::string detail;
            for (const auto& [nm, val] : results) detail += nm + "=" + to_decimal(val) + " ";
            return check_failed(out, "methods disagree: " + detail);
        }
    }
    out.line(to_decimal(results.front().second));
    out.fact("count", to_decimal(results.front().second));
    return out;
}

// ---------------------------------------------------------------- generate

CommandOutcome cmd_generate(const GenerateOptions& opt, std::ostream& data) {
    CommandOutcome out;
    const std::size_t n = opt.n;
    if (n == 0) return usage_error(out, "--n must be positive");
    if (opt.algorithm != "naive" && opt.algorithm != "bijection")
        return usage_error(out, "--algorithm must be 'naive' or 'bijection'");
    if (opt.format != "bm01" && opt.format != "spm" && opt.format != "pim")
        return usage_error(out, "--format must be one of bm01, spm, pim");

    const bool naive = opt.algorithm == "naive";
    if (naive && n > kNaiveMaxN) {
        if (!opt.force)
            return usage_error(out, "naive generation for n = " + std::to_string(n) +
                                        " exceeds the guard n <= 3; pass --force to run anyway");
        out.line("estimate: " + to_decimal(naive_candidate_count(n)) + " candidates");
        out.fact("estimate", to_decimal(naive_candidate_count(n)));
    }
    if (!naive && n >= 4 && !opt.limit) {
        if (!opt.force)
            return usage_error(out, "full bijective enumeration for n = " + std::to_string(n) + " yields " +
                                        to_decimal(pi_cardinality(n)) +
                                        " matrices; pass --limit or --force");
        out.line("estimate: " + to_decimal(pi_cardinality(n)) + " matrices");
        out.fact("estimate", to_decimal(pi_cardinality(n)));
    }

    std::ofstream file;
    std::ostream* sink = &data;
    if (!opt.count_only && !opt.out.empty()) {
        file.open(opt.out, std::ios::binary | std::ios::trunc);
        if (!file) return usage_error(out, "cannot write to '" + opt.out + "'");
        sink = &file;
    }

    std::uint64_t emitted = 0;
    auto room = [&] { return !opt.limit || emitted < *opt.limit; };

    if (!naive && opt.count_only && !opt.limit && opt.skip == 0) {
        emitted = count_bijective_sharded(n, hardware_threads());
    } else if (!naive) {
        if (opt.format == "spm" && !opt.count_only) *sink << io::spm_header(n);
        PiStream stream(n, opt.skip);
        while (room()) {
            auto p = stream.next();
            if (!p) break;
            if (!opt.count_only) {
                if (opt.format == "pim") *sink << io::to_pim(*p);
                else if (opt.format == "spm") *sink << io::spm_line(phi(*p));
                else *sink << io::to_bm01(phi(*p).to_dense());
            }
            ++emitted;
        }
    } else {
        NaiveStream stream(n, opt.skip, opt.force ? n : kNaiveMaxN);
        if (opt.format == "spm" && !opt.count_only) *sink << io::spm_header(n);
        while (room()) {
            auto m = stream.next();
            if (!m) break;
            if (!opt.count_only) {
                if (opt.format == "pim") *sink << io::to_pim(phi_inverse(*m));
                else if (opt.format == "spm") *sink << io::spm_line(*m);
                else *sink << io::to_bm01(m->to_dense());
            }
            ++emitted;
        }
        out.fact("candidates_examined", std::to_string(stream.candidates_examined()));
        if (opt.count_only) out.line(std::to_string(emitted));
        else out.line("emitted: " + std::to_string(emitted));
        out.line("candidates examined: " + std::to_string(stream.candidates_examined()));
        out.fact("emitted", std::to_string(emitted));
        if (file.is_open() && !file.flush()) return usage_error(out, "failed writing '" + opt.out + "'");
        return out;
    }

    if (file.is_open() && !file.flush()) return usage_error(out, "failed writing '" + opt.out + "'");
    out.line(opt.count_only ? std::to_string(emitted) : "emitted: " + std::to_string(emitted));
    out.fact("emitted", std::to_string(emitted));
    return out;
}

// ---------------------------------------------------------------- verify

namespace {

void verify_bijection(std::size_t n, const VerifyOptions& opt, CommandOutcome& out) {
    std::uint64_t cases = 0, passed = 0;
    std::set<SPermutationMatrix> images;
    auto check = [&](const PiMatrix& p) {
        ++cases;
        const auto a = phi(p);
        const bool ok = is_s_permutation(a.to_dense()) && phi_inverse(a) == p;
        if (ok) ++passed;
        if (n <= 3) images.insert(a);
    };
    const bool exhaustive = n <= 3;
    if (exhaustive) {
        PiStream stream(n);
        while (auto p = stream.next()) check(*p);
    } else {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t i = 0; i < opt.samples; ++i) check(random_pi_matrix(n, rng));
    }
    out.line(std::string(exhaustive ? "exhaustive" : "sampled") + ": " + std::to_string(passed) + "/" +
             std::to_string(cases) + " roundtrips pass");
    out.fact("mode", exhaustive ? "exhaustive" : "sampled");
    out.fact("cases", std::to_string(cases));
    out.fact("passed", std::to_string(passed));
    if (exhaustive) {
        out.line("distinct images: " + std::to_string(images.size()) + " (expected " +
                 to_decimal(pi_cardinality(n)) + ")");
        out.fact("distinct_images", std::to_string(images.size()));
        if (BigCount(images.size()) != pi_cardinality(n)) out.exit_code = kCheckFailed;
    }
    if (passed != cases) out.exit_code = kCheckFailed;
}

void verify_disjointness(std::size_t n, const VerifyOptions& opt, CommandOutcome& out) {
    std::uint64_t cases = 0, passed = 0, disjoint = 0;
    auto check = [&](const PiMatrix& p, const PiMatrix& q) {
        ++cases;
        const bool pi_side = are_disjoint_pi(p, q);
        if (pi_side == are_disjoint_sigma(phi(p), phi(q))) ++passed;
        if (pi_side) ++disjoint;
    };
    const bool exhaustive = n <= 2;
    if (exhaustive) {
        std::vector<PiMatrix> all;
        PiStream stream(n);
        while (auto p = stream.next()) all.push_back(std::move(*p));
        for (const auto& p : all)
            for (const auto& q : all) check(p, q);
    } else {
        std::mt19937_64 rng(opt.seed);
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
            const auto p = random_pi_matrix(n, rng);
            // Half the pairs reuse most of p so that non-disjoint pairs are also exercised.
            auto q = random_pi_matrix(n, rng);
            if (i % 2 == 0) {
                std::vector<int> e(p.entries().begin(), p.entries().end());
                const auto row = (i / 2) % (2 * n);
                std::copy(q.row(row + 1).begin(), q.row(row + 1).end(), e.begin() + static_cast<long>(row * n));
                q = PiMatrix(n, std::move(e));
            }
            check(p, q);
        }
    }
    out.line(std::string(exhaustive ? "exhaustive" : "sampled") + ": " + std::to_string(passed) + "/" +
             std::to_string(cases) + " pair equivalences pass (" + std::to_string(disjoint) + " disjoint pairs)");
    out.fact("mode", exhaustive ? "exhaustive" : "sampled");
    out.fact("cases", std::to_string(cases));
    out.fact("passed", std::to_string(passed));
    out.fact("disjoint_pairs", std::to_string(disjoint));
    if (passed != cases) out.exit_code = kCheckFailed;
}

void verify_naive_equivalence(std::size_t n, CommandOutcome& out) {
    std::set<SPermutationMatrix> naive_set, bij_set;
    NaiveStream naive(n, 0, n);
    while (auto m = naive.next()) naive_set.insert(std::move(*m));
    BijectiveStream bij(n);
    while (auto m = bij.next()) bij_set.insert(std::move(*m));
    const bool equal = naive_set == bij_set;
    out.line(std::string(equal ? "sets equal" : "sets differ") + " (naive " + std::to_string(naive_set.size()) +
             " elements, bijective " + std::to_string(bij_set.size()) + " elements; " +
             std::to_string(naive.candidates_examined()) + " candidates examined)");
    out.fact("naive_elements", std::to_string(naive_set.size()));
    out.fact("bijective_elements", std::to_string(bij_set.size()));
    out.fact("candidates_examined", std::to_string(naive.candidates_examined()));
    out.fact("equal", equal ? "true" : "false");
    if (!equal) out.exit_code = kCheckFailed;
}

void verify_sudoku_roundtrip(std::size_t n, CommandOutcome& out) {
    std::uint64_t cases = 0, passed = 0;
    const BigCount total = enumerate_sudoku(
        n,
        [&](const SudokuMatrix& s) {
            ++cases;
            const auto parts = decompose(s);
            bool ok = parts.size() == s.side();
            for (std::size_t a = 0; a < parts.size() && ok; ++a) {
                ok = is_s_permutation(parts[a].to_dense());
                for (std::size_t b = a + 1; b < parts.size() && ok; ++b) ok = are_disjoint_sigma(parts[a], parts[b]);
            }
            ok = ok && compose(parts) == s && decompose(compose(parts)) == parts;
            if (ok) ++passed;
        },
        n);
    out.line(std::to_string(passed) + "/" + std::to_string(cases) + " roundtrips pass over " + to_decimal(total) +
             " grids");
    out.fact("grids", to_decimal(total));
    out.fact("cases", std::to_string(cases));
    out.fact("passed", std::to_string(passed));
    if (passed != cases) out.exit_code = kCheckFailed;
}

}  // namespace

CommandOutcome cmd_verify(const VerifyOptions& opt) {
    CommandOutcome out;
    const std::size_t n = opt.n;
    if (n == 0) return usage_error(out, "--n must be positive");

    std::size_t guard = 0;
    if (opt.check == "bijection") guard = 8;
    else if (opt.check == "disjointness") guard = 8;
    else if (opt.check == "naive-equivalence") guard = kNaiveMaxN;
    else if (opt.check == "sudoku-roundtrip") guard = kSudokuEnumerateMaxN;
    else return usage_error(out, "unknown check '" + opt.check + "'");
    if (n > guard && !opt.force)
        return usage_error(out, opt.check + " for n = " + std::to_string(n) + " exceeds the guard n <= " +
                                    std::to_string(guard) + "; pass --force to run anyway");

    out.fact("check", opt.check);
    out.fact("n", std::to_string(n));
    if (opt.check == "bijection") verify_bijection(n, opt, out);
    else if (opt.check == "disjointness") verify_disjointness(n, opt, out);
    else if (opt.check == "naive-equivalence") verify_naive_equivalence(n, out);
    else verify_sudoku_roundtrip(n, out);
    if (out.exit_code == kCheckFailed) out.line("FAILED: " + opt.check);
    return out;
}

// ---------------------------------------------------------------- bench

CommandOutcome cmd_bench(const BenchOptions& opt) {
    CommandOutcome out;
    const std::size_t n = opt.n;
    if (n == 0) return usage_error(out, "--n must be positive");
    if (opt.repetitions == 0) return usage_error(out, "--repetitions must be positive");

    const BigCount candidates = naive_candidate_count(n);
    const BigCount survivors = pi_cardinality(n);
    out.line("n = " + std::to_string(n));
    out.line("naive candidates ((n²)!): " + to_decimal(candidates));
    out.line("S-permutation matrices ((n!)^(2n)): " + to_decimal(survivors));
    out.line("ratio: " + ratio_text(candidates, survivors));
    out.fact("n", std::to_string(n));
    out.fact("naive_candidates", to_decimal(candidates));
    out.fact("survivors", to_decimal(survivors));
    const BigRational r(candidates, survivors);
    out.fact("ratio", to_decimal(boost::multiprecision::numerator(r)) + "/" +
                          to_decimal(boost::multiprecision::denominator(r)));

    if (n > kNaiveMaxN) {
        out.line("generation skipped for n > 3 (ratio only)");
        return out;
    }

    using Clock = std::chrono::steady_clock;
    double best_naive = 1e300, best_bij = 1e300;
    std::uint64_t naive_examined = 0, naive_survivors = 0, bij_count = 0;
    for (unsigned rep = 0; rep < opt.repetitions; ++rep) {
        auto t0 = Clock::now();
        NaiveStream naive(n);
        while (naive.next()) {
        }
        auto t1 = Clock::now();
        BijectiveStream bij(n);
        std::uint64_t c = 0;
        while (bij.next()) ++c;
        auto t2 = Clock::now();
        best_naive = std::min(best_naive, std::chrono::duration<double, std::milli>(t1 - t0).count());
        best_bij = std::min(best_bij, std::chrono::duration<double, std::milli>(t2 - t1).count());
        naive_examined = naive.candidates_examined();
        naive_survivors = naive.survivors();
        bij_count = c;
    }
    char buf[64];
    out.line("naive:     candidates examined " + std::to_string(naive_examined) + ", survivors " +
             std::to_string(naive_survivors));
    std::snprintf(buf, sizeof buf, "%.3f", best_naive);
    out.line(std::string("naive:     best wall-clock ") + buf + " ms over " + std::to_string(opt.repetitions) +
             " runs");
    out.fact("naive_ms", buf);
    std::snprintf(buf, sizeof buf, "%.3f", best_bij);
    out.line("bijection: generated " + std::to_string(bij_count) + ", no candidates rejected");
    out.line(std::string("bijection: best wall-clock ") + buf + " ms over " + std::to_string(opt.repetitions) +
             " runs");
    out.fact("bijection_ms", buf);
    out.fact("naive_examined", std::to_string(naive_examined));
    out.fact("naive_survivors", std::to_string(naive_survivors));
    out.fact("bijection_generated", std::to_string(bij_count));

    if (BigCount(naive_survivors) != survivors || BigCount(bij_count) != survivors ||
        BigCount(naive_examined) != candidates)
        return check_failed(out, "generator counts do not match the expected cardinalities");
    if (n == 3 && !(best_bij < best_naive)) return check_failed(out, "bijective generator is not faster at n = 3");
    return out;
}

// ---------------------------------------------------------------- sudoku

CommandOutcome cmd_sudoku(const SudokuOptions& opt, std::ostream& data) {
    CommandOutcome out;
    try {
        if (opt.action == "validate") {
            if (opt.inputs.size() != 1) return usage_error(out, "validate takes exactly one .sdk file");
            const auto grid = io::parse_sdk(io::read_file(opt.inputs[0]));
            if (auto v = find_sudoku_violation(grid.n, grid.cells)) {
                out.fact("valid", "false");
                out.fact("violation", v->describe());
                return check_failed(out, "invalid Sudoku grid: " + v->describe());
            }
            out.line("valid");
            out.fact("valid", "true");
            return out;
        }
        if (opt.action == "decompose") {
            if (opt.inputs.size() != 1) return usage_error(out, "decompose takes exactly one .sdk file");
            const auto grid = io::parse_sdk(io::read_file(opt.inputs[0]));
            if (auto v = find_sudoku_violation(grid.n, grid.cells))
                return check_failed(out, "invalid Sudoku grid: " + v->describe());
            const auto parts = decompose(SudokuMatrix(grid.n, grid.cells));
            if (opt.out.empty()) {
                data << io::spm_header(grid.n);
                for (const auto& p : parts) data << io::spm_line(p);
            } else {
                std::filesystem::create_directories(opt.out);
                for (std::size_t v = 0; v < parts.size(); ++v) {
                    const auto path = (std::filesystem::path(opt.out) / ("part_" + std::to_string(v + 1) + ".spm"));
                    io::write_file(path.string(), io::to_spm(parts[v]));
                    out.fact("part." + std::to_string(v + 1), path.string());
                }
            }
            out.line("parts: " + std::to_string(parts.size()));
            out.fact("parts", std::to_string(parts.size()));
            return out;
        }
        if (opt.action == "compose") {
            if (opt.inputs.empty()) return usage_error(out, "compose takes one or more .spm files");
            std::vector<SPermutationMatrix> parts;
            for (const auto& path : opt.inputs) {
                auto more = io::parse_spm_all(io::read_file(path));
                parts.insert(parts.end(), more.begin(), more.end());
            }
            try {
                const auto grid = compose(parts);
                const auto text = io::to_sdk(grid);
                if (opt.out.empty()) data << text;
                else io::write_file(opt.out, text);
            } catch (const OverlapError& e) {
                out.fact("overlap", std::to_string(e.first()) + "," + std::to_string(e.second()));
                return check_failed(out, e.what());
            }
            out.line("composed " + std::to_string(parts.size()) + " parts");
            out.fact("parts", std::to_string(parts.size()));
            return out;
        }
        if (opt.action == "enumerate") {
            const std::size_t n = opt.n;
            if (n == 0) return usage_error(out, "--n must be positive");
            if (n > kSudokuEnumerateMaxN) {
                if (!opt.force)
                    return usage_error(out, "Sudoku enumeration for n = " + std::to_string(n) +
                                                " exceeds the guard n <= 2; pass --force to run anyway");
                out.line("estimate: search over " + to_decimal(pi_cardinality(n)) +
                         " S-permutation matrices per level, " + std::to_string(n * n) + " levels");
            }
            std::ofstream file;
            std::ostream* sink = &data;
            if (!opt.count_only && !opt.out.empty()) {
                file.open(opt.out, std::ios::binary | std::ios::trunc);
                if (!file) return usage_error(out, "cannot write to '" + opt.out + "'");
                sink = &file;
            }
            BigCount total;
            if (opt.count_only) {
                total = enumerate_sudoku_sharded(n, hardware_threads(), std::max<std::size_t>(n, kSudokuEnumerateMaxN));
            } else {
                total = enumerate_sudoku(
                    n, [&](const SudokuMatrix& s) { *sink << io::to_sdk(s); },
                    std::max<std::size_t>(n, kSudokuEnumerateMaxN));
            }
            out.line(opt.count_only ? to_decimal(total) : "grids: " + to_decimal(total));
            out.fact("grids", to_decimal(total));
            return out;
        }
        return usage_error(out, "unknown sudoku action '" + opt.action + "'");
    } catch (const ParseError& e) {
        return usage_error(out, e.what());
    } catch (const SudokuError& e) {
        return check_failed(out, e.what());
    } catch (const StructuralError& e) {
        return usage_error(out, e.what());
    } catch (const std::runtime_error& e) {
        return usage_error(out, e.what());
    }
}

}  // namespace bmat::cli
