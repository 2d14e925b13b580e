#include "bmat/cli.hpp"

#include "bmat/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>

namespace bmat::cli {

CommandOutcome run(const std::vector<std::string>& args, std::ostream& data, bool* machine) {
    CLI::App app{"Enumerate and count binary matrix classes: Λ-matrices, S-permutation matrices, Sudoku grids",
                 "bmat"};
    app.require_subcommand(1);
    app.fallthrough();
    bool machine_flag = false;
    app.add_flag("--machine", machine_flag, "Print the report as key=value lines");

    CountOptions count;
    auto* c = app.add_subcommand("count", "Count Λ(n,k) or μ(n,k) matrices");
    c->add_option("target", count.target, "lambda or mu")->required()->check(CLI::IsMember({"lambda", "mu"}));
    c->add_option("--n", count.n, "Matrix order")->required();
    c->add_option("--k", count.k, "Ones per row/column (and block, for mu)");
    c->add_option("--method", count.method,
                  "auto, all, brute, or a formula: factorial | sum | anand | good | system | explicit | formula");
    c->add_flag("--force", count.force, "Run brute force past its size guard");

    GenerateOptions gen;
    auto* g = app.add_subcommand("generate", "Stream S-permutation matrices");
    g->add_option("--n", gen.n, "Block order (matrices are n²×n²)")->required();
    g->add_option("--algorithm", gen.algorithm, "naive | bijection");
    g->add_option("--limit", gen.limit, "Emit at most this many matrices");
    g->add_option("--skip", gen.skip, "Drop this many matrices from the start of the stream");
    g->add_flag("--count-only", gen.count_only, "Print only the number of matrices");
    g->add_option("--format", gen.format, "bm01 | spm | pim");
    g->add_option("--out", gen.out, "Output file (default: standard output)");
    g->add_flag("--force", gen.force, "Run past the size guard");

    VerifyOptions ver;
    auto* v = app.add_subcommand("verify", "Check the bijection and decomposition invariants");
    v->add_option("check", ver.check, "bijection | disjointness | naive-equivalence | sudoku-roundtrip")
        ->required()
        ->check(CLI::IsMember({"bijection", "disjointness", "naive-equivalence", "sudoku-roundtrip"}));
    v->add_option("--n", ver.n, "Block order")->required();
    v->add_option("--samples", ver.samples, "Sample size where the check is not exhaustive");
    v->add_option("--seed", ver.seed, "Seed for sampled checks");
    v->add_flag("--force", ver.force, "Run past the size guard");

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "Compare naive and bijective generation");
    b->add_option("--n", bench.n, "Block order");
    b->add_option("--repetitions", bench.repetitions, "Timed runs per algorithm (best is reported)");

    SudokuOptions sdk;
    auto* s = app.add_subcommand("sudoku", "Validate, compose, decompose or enumerate Sudoku grids");
    s->add_option("action", sdk.action, "validate | compose | decompose | enumerate")
        ->required()
        ->check(CLI::IsMember({"validate", "compose", "decompose", "enumerate"}));
    s->add_option("inputs", sdk.inputs, "Input files (.sdk or .spm)");
    s->add_option("--n", sdk.n, "Block order for enumerate");
    s->add_flag("--count-only", sdk.count_only, "Print only the number of grids");
    s->add_option("--out", sdk.out, "Output file, or directory for decompose");
    s->add_flag("--force", sdk.force, "Run past the size guard");

    CommandOutcome out;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out.report = app.help();
        return out;
    } catch (const CLI::CallForAllHelp&) {
        out.report = app.help("", CLI::AppFormatMode::All);
        return out;
    } catch (const CLI::ParseError& e) {
        out.exit_code = kUsage;
        out.line(std::string("error: ") + e.what());
        out.line("run with --help for usage");
        out.fact("error", e.what());
        return out;
    }
    if (machine) *machine = machine_flag;

    try {
        if (c->parsed()) return cmd_count(count);
        if (g->parsed()) return cmd_generate(gen, data);
        if (v->parsed()) return cmd_verify(ver);
        if (b->parsed()) return cmd_bench(bench);
        return cmd_sudoku(sdk, data);
    } catch (const GuardError& e) {
        out.exit_code = kUsage;
        out.line(std::string("error: ") + e.what());
    } catch (const StructuralError& e) {
        out.exit_code = kUsage;
        out.line(std::string("error: ") + e.what());
    }
    return out;
}

}  // namespace bmat::cli
