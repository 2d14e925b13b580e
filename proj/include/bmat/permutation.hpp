#pragma once

#include "bmat/binary_matrix.hpp"

#include <compare>
#include <span>
#include <vector>

namespace bmat {

/// A rearrangement ⟨p_1, ..., p_m⟩ of 1..m.
class Permutation {
public:
    /// Throws StructuralError unless values holds each of 1..m exactly once.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(std::size_t m);

    std::size_t size() const noexcept { return values_.size(); }
    /// p_i for 1-based i.
    int value(std::size_t i) const { return values_.at(i - 1); }
    std::span<const int> values() const noexcept { return values_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// True iff values is a rearrangement of 1..values.size().
bool is_permutation_of_1_to_m(std::span<const int> values);

/// m×m matrix with b_ij = 1 iff p_i = j.
BinaryMatrix permutation_to_matrix(const Permutation& p);

}  // namespace bmat
