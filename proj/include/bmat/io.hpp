#pragma once

#include "bmat/binary_matrix.hpp"
#include "bmat/pi_matrix.hpp"
#include "bmat/s_permutation.hpp"
#include "bmat/sudoku.hpp"

#include <string>
#include <string_view>
#include <vector>

// Text formats. Every record starts with a header line holding a decimal size.
//   .bm01  side, then `side` lines of exactly `side` characters from {0,1}
//   .pim   n, then 2n lines of n space-separated integers in 1..n
//   .spm   n, then one line per matrix of n² space-separated column indices
//   .sdk   n, then n² lines of n² space-separated integers in 1..n²
// All lines end in '\n'. A .bm01 or .pim file may hold several records back to
// back; a .spm file has a single header followed by any number of matrix lines.
// Parse failures throw ParseError with 1-based line/column.

namespace bmat::io {

std::string to_bm01(const BinaryMatrix& m);
BinaryMatrix parse_bm01(std::string_view text);
std::vector<BinaryMatrix> parse_bm01_all(std::string_view text);

std::string to_pim(const PiMatrix& p);
PiMatrix parse_pim(std::string_view text);
std::vector<PiMatrix> parse_pim_all(std::string_view text);

std::string spm_header(std::size_t n);
std::string spm_line(const SPermutationMatrix& m);
inline std::string to_spm(const SPermutationMatrix& m) { return spm_header(m.order()) + spm_line(m); }
/// Exactly one matrix.
SPermutationMatrix parse_spm(std::string_view text);
std::vector<SPermutationMatrix> parse_spm_all(std::string_view text);

/// Grid as read, before any Latin check.
struct RawGrid {
    std::size_t n;
    std::vector<int> cells;
};

std::string to_sdk(const SudokuMatrix& s);
/// Checks shape and value range only; Latin constraints are left to the caller.
RawGrid parse_sdk(std::string_view text);

std::string read_file(const std::string& path);
/// Throws std::runtime_error if the file cannot be written.
void write_file(const std::string& path, std::string_view contents);

}  // namespace bmat::io
