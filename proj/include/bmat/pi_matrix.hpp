#pragma once

#include "bmat/permutation.hpp"
#include "bmat/s_permutation.hpp"

#include <compare>
#include <random>
#include <span>
#include <vector>

namespace bmat {

/// A (2n)×n matrix whose every row is a permutation of 1..n (an element of Π_n).
/// Rows 1..n and n+1..2n play different roles under phi: entry (s,t) picks the
/// local row inside block (s,t), entry (n+t,s) picks its local column.
class PiMatrix {
public:
    explicit PiMatrix(const std::vector<Permutation>& rows);
    /// Row-major entries, 2n rows of n values. Throws StructuralError on any invalid row.
    PiMatrix(std::size_t n, std::vector<int> entries);

    std::size_t order() const noexcept { return n_; }
    /// p_ij with 1-based i in 1..2n, j in 1..n.
    int at(std::size_t i, std::size_t j) const { return entries_.at((i - 1) * n_ + (j - 1)); }
    std::span<const int> row(std::size_t i) const;
    std::span<const int> entries() const noexcept { return entries_; }

    friend bool operator==(const PiMatrix&, const PiMatrix&) = default;
    friend auto operator<=>(const PiMatrix&, const PiMatrix&) = default;

private:
    std::size_t n_;
    std::vector<int> entries_;
};

/// The block-by-block map Π_n → Σ_{n²}: block (s,t) gets its single 1 at local
/// position (p_{s,t}, p_{n+t,s}).
SPermutationMatrix phi(const PiMatrix& p);

/// Unique P with phi(P) == a.
PiMatrix phi_inverse(const SPermutationMatrix& a);

/// False iff some (s,t) has ⟨c_{s,t}, c_{n+t,s}⟩ == ⟨d_{s,t}, d_{n+t,s}⟩.
bool are_disjoint_pi(const PiMatrix& c, const PiMatrix& d);

/// Π_n element with independently shuffled rows. Used by sampled checks.
PiMatrix random_pi_matrix(std::size_t n, std::mt19937_64& rng);

}  // namespace bmat
