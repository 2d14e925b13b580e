#include "bmat/pi_matrix.hpp"

#include "bmat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bmat {

PiMatrix::PiMatrix(const std::vector<Permutation>& rows) : n_(rows.size() / 2) {
    if (rows.empty() || rows.size() % 2 != 0) throw StructuralError("a Π matrix needs 2n rows");
    entries_.reserve(2 * n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_)
            throw StructuralError("Π matrix row has length " + std::to_string(r.size()) + ", expected " +
                                  std::to_string(n_));
        entries_.insert(entries_.end(), r.values().begin(), r.values().end());
    }
}

PiMatrix::PiMatrix(std::size_t n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw StructuralError("Π matrix order must be positive");
    if (entries_.size() != 2 * n_ * n_)
        throw StructuralError("Π matrix of order " + std::to_string(n_) + " needs " + std::to_string(2 * n_ * n_) +
                              " entries");
    for (std::size_t i = 1; i <= 2 * n_; ++i)
        if (!is_permutation_of_1_to_m(row(i)))
            throw StructuralError("row " + std::to_string(i) + " is not a permutation of 1.." + std::to_string(n_));
}

std::span<const int> PiMatrix::row(std::size_t i) const {
    if (i < 1 || i > 2 * n_) throw StructuralError("Π matrix row index out of range");
    return std::span<const int>(entries_).subspan((i - 1) * n_, n_);
}

SPermutationMatrix phi(const PiMatrix& p) {
    const std::size_t n = p.order();
    const auto e = p.entries();
    std::vector<int> cols(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            const auto k = static_cast<std::size_t>(e[s * n + t]);          // p_{s,t}
            const auto l = static_cast<std::size_t>(e[(n + t) * n + s]);    // p_{n+t,s}
            cols[s * n + (k - 1)] = static_cast<int>(t * n + l);
        }
    }
    // Rows 1..n of P make every row band hit each local row once; rows n+1..2n
    // do the same for columns, so cols is an S-permutation.
    return SPermutationBuilder::assume_valid(n, std::move(cols));
}

PiMatrix phi_inverse(const SPermutationMatrix& a) {
    const std::size_t n = a.order();
    const auto cols = a.column_of_row();
    std::vector<int> entries(2 * n * n);
    for (std::size_t r = 0; r < n * n; ++r) {
        const std::size_t s = r / n, k = r % n + 1;
        const auto c = static_cast<std::size_t>(cols[r] - 1);
        const std::size_t t = c / n, l = c % n + 1;
        entries[s * n + t] = static_cast<int>(k);
        entries[(n + t) * n + s] = static_cast<int>(l);
    }
    return PiMatrix(n, std::move(entries));
}

bool are_disjoint_pi(const PiMatrix& c, const PiMatrix& d) {
    if (c.order() != d.order())
        throw StructuralError("cannot compare Π matrices of orders " + std::to_string(c.order()) + " and " +
                              std::to_string(d.order()));
    const std::size_t n = c.order();
    for (std::size_t s = 1; s <= n; ++s)
        for (std::size_t t = 1; t <= n; ++t)
            if (c.at(s, t) == d.at(s, t) && c.at(n + t, s) == d.at(n + t, s)) return false;
    return true;
}

PiMatrix random_pi_matrix(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> entries;
    entries.reserve(2 * n * n);
    std::vector<int> row(n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        std::iota(row.begin(), row.end(), 1);
        std::shuffle(row.begin(), row.end(), rng);
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return PiMatrix(n, std::move(entries));
}

}  // namespace bmat
