#include "bmat/io.hpp"

#include "bmat/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bmat::io {

namespace {

// Line-oriented reader over an in-memory buffer that remembers line numbers.
class Lines {
public:
    explicit Lines(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    std::size_t line_no() const { return line_; }

    std::string_view next(const char* expecting) {
        if (at_end()) throw ParseError(line_ + 1, 0, std::string("unexpected end of input, expected ") + expecting);
        const auto nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos) throw ParseError(line_ + 1, 0, "missing final newline");
        auto line = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        ++line_;
        return line;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

long parse_decimal(std::string_view tok, std::size_t line, std::size_t col) {
    long v = 0;
    if (tok.empty()) throw ParseError(line, col, "expected a number");
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || ptr != end || tok.front() == '-' || tok.front() == '+')
        throw ParseError(line, col, "'" + std::string(tok) + "' is not a decimal number");
    return v;
}

std::size_t parse_header(Lines& in, const char* what) {
    auto line = in.next(what);
    const long v = parse_decimal(line, in.line_no(), 1);
    if (v < 1) throw ParseError(in.line_no(), 1, "size must be positive");
    return static_cast<std::size_t>(v);
}

// Exactly `count` integers in lo..hi separated by single spaces.
std::vector<int> parse_int_row(Lines& in, std::size_t count, long lo, long hi, const char* what) {
    auto line = in.next(what);
    const std::size_t ln = in.line_no();
    std::vector<int> out;
    out.reserve(count);
    std::size_t pos = 0;
    while (true) {
        const auto sp = line.find(' ', pos);
        const auto tok = line.substr(pos, sp == std::string_view::npos ? std::string_view::npos : sp - pos);
        const long v = parse_decimal(tok, ln, pos + 1);
        if (v < lo || v > hi)
            throw ParseError(ln, pos + 1, "value " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                                              std::to_string(hi));
        out.push_back(static_cast<int>(v));
        if (sp == std::string_view::npos) break;
        pos = sp + 1;
    }
    if (out.size() != count)
        throw ParseError(ln, 0, "expected " + std::to_string(count) + " values, found " + std::to_string(out.size()));
    return out;
}

BinaryMatrix read_bm01_record(Lines& in) {
    const std::size_t side = parse_header(in, "matrix side");
    BinaryMatrix m(side);
    for (std::size_t i = 1; i <= side; ++i) {
        auto line = in.next("matrix row");
        for (std::size_t j = 0; j < line.size(); ++j)
            if (line[j] != '0' && line[j] != '1')
                throw ParseError(in.line_no(), j + 1, "expected '0' or '1'");
        if (line.size() != side)
            throw ParseError(in.line_no(), 0,
                             "row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(side));
        for (std::size_t j = 0; j < side; ++j)
            if (line[j] == '1') m.set(i, j + 1);
    }
    return m;
}

PiMatrix read_pim_record(Lines& in) {
    const std::size_t n = parse_header(in, "Π matrix order");
    std::vector<int> entries;
    entries.reserve(2 * n * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        auto row = parse_int_row(in, n, 1, static_cast<long>(n), "Π matrix row");
        if (!is_permutation_of_1_to_m(row)) throw ParseError(in.line_no(), 0, "row is not a permutation of 1..n");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return PiMatrix(n, std::move(entries));
}

SPermutationMatrix read_spm_line(Lines& in, std::size_t n) {
    auto cols = parse_int_row(in, n * n, 1, static_cast<long>(n * n), "column indices");
    if (!is_s_permutation_columns(n, cols))
        throw ParseError(in.line_no(), 0, "columns do not form an S-permutation matrix");
    return SPermutationMatrix(n, std::move(cols));
}

template <typename Record, typename Read>
std::vector<Record> read_all(std::string_view text, Read read) {
    Lines in(text);
    std::vector<Record> out;
    do {
        out.push_back(read(in));
    } while (!in.at_end());
    return out;
}

template <typename Record, typename Read>
Record read_one(std::string_view text, Read read) {
    Lines in(text);
    Record r = read(in);
    if (!in.at_end()) throw ParseError(in.line_no() + 1, 0, "trailing content after record");
    return r;
}

void append_row(std::string& out, std::span<const int> values) {
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(values[j]);
    }
    out += '\n';
}

}  // namespace

std::string to_bm01(const BinaryMatrix& m) {
    std::string out = std::to_string(m.side()) + '\n';
    out.reserve(out.size() + m.side() * (m.side() + 1));
    for (std::size_t i = 1; i <= m.side(); ++i) {
        for (std::size_t j = 1; j <= m.side(); ++j) out += m.get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

BinaryMatrix parse_bm01(std::string_view text) { return read_one<BinaryMatrix>(text, read_bm01_record); }
std::vector<BinaryMatrix> parse_bm01_all(std::string_view text) {
    return read_all<BinaryMatrix>(text, read_bm01_record);
}

std::string to_pim(const PiMatrix& p) {
    std::string out = std::to_string(p.order()) + '\n';
    for (std::size_t i = 1; i <= 2 * p.order(); ++i) append_row(out, p.row(i));
    return out;
}

PiMatrix parse_pim(std::string_view text) { return read_one<PiMatrix>(text, read_pim_record); }
std::vector<PiMatrix> parse_pim_all(std::string_view text) { return read_all<PiMatrix>(text, read_pim_record); }

std::string spm_header(std::size_t n) { return std::to_string(n) + '\n'; }

std::string spm_line(const SPermutationMatrix& m) {
    std::string out;
    append_row(out, m.column_of_row());
    return out;
}

SPermutationMatrix parse_spm(std::string_view text) {
    return read_one<SPermutationMatrix>(text, [](Lines& in) {
        const std::size_t n = parse_header(in, "block order");
        return read_spm_line(in, n);
    });
}

std::vector<SPermutationMatrix> parse_spm_all(std::string_view text) {
    Lines in(text);
    const std::size_t n = parse_header(in, "block order");
    std::vector<SPermutationMatrix> out;
    while (!in.at_end()) out.push_back(read_spm_line(in, n));
    return out;
}

std::string to_sdk(const SudokuMatrix& s) {
    std::string out = std::to_string(s.order()) + '\n';
    for (std::size_t i = 0; i < s.side(); ++i) append_row(out, s.cells().subspan(i * s.side(), s.side()));
    return out;
}

RawGrid parse_sdk(std::string_view text) {
    return read_one<RawGrid>(text, [](Lines& in) {
        const std::size_t n = parse_header(in, "block order");
        const std::size_t side = n * n;
        RawGrid g{n, {}};
        g.cells.reserve(side * side);
        for (std::size_t i = 0; i < side; ++i) {
            auto row = parse_int_row(in, side, 1, static_cast<long>(side), "grid row");
            g.cells.insert(g.cells.end(), row.begin(), row.end());
        }
        return g;
    });
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace bmat::io
