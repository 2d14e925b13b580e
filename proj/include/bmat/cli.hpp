#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bmat::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Result of one command: exit code, human text, and the same facts as key=value pairs.
struct CommandOutcome {
    int exit_code = kOk;
    std::string report;
    std::vector<std::pair<std::string, std::string>> machine_report;

    void line(const std::string& text) { report += text + '\n'; }
    void fact(std::string key, std::string value) { machine_report.emplace_back(std::move(key), std::move(value)); }
    /// Human report, or key=value lines when machine is set.
    std::string render(bool machine) const;
};

struct CountOptions {
    std::string target;  // lambda | mu
    unsigned n = 0;
    unsigned k = 1;
    std::string method = "auto";
    bool force = false;
};

struct GenerateOptions {
    unsigned n = 0;
    std::string algorithm = "bijection";  // naive | bijection
    std::optional<std::uint64_t> limit;
    std::uint64_t skip = 0;
    bool count_only = false;
    std::string format = "spm";  // bm01 | spm | pim
    std::string out;             // empty: write to the data stream
    bool force = false;
};

struct VerifyOptions {
    std::string check;  // bijection | disjointness | naive-equivalence | sudoku-roundtrip
    unsigned n = 0;
    std::uint64_t samples = 2000;
    std::uint64_t seed = 20100101;
    bool force = false;
};

struct BenchOptions {
    unsigned n = 3;
    unsigned repetitions = 3;
};

struct SudokuOptions {
    std::string action;  // validate | compose | decompose | enumerate
    std::vector<std::string> inputs;
    unsigned n = 2;
    bool count_only = false;
    std::string out;
    bool force = false;
};

CommandOutcome cmd_count(const CountOptions& opt);
/// Matrices go to `data` unless opt.out names a file.
CommandOutcome cmd_generate(const GenerateOptions& opt, std::ostream& data);
CommandOutcome cmd_verify(const VerifyOptions& opt);
CommandOutcome cmd_bench(const BenchOptions& opt);
CommandOutcome cmd_sudoku(const SudokuOptions& opt, std::ostream& data);

/// Parses argv-style arguments (without the program name) and dispatches.
/// Sets `machine` when --machine was given.
CommandOutcome run(const std::vector<std::string>& args, std::ostream& data, bool* machine = nullptr);

}  // namespace bmat::cli
