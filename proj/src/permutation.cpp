#include "bmat/permutation.hpp"

#include "bmat/errors.hpp"

#include <numeric>

namespace bmat {

bool is_permutation_of_1_to_m(std::span<const int> values) {
    const auto m = values.size();
    std::vector<bool> seen(m + 1, false);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > m || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw StructuralError("permutation must be non-empty");
    if (!is_permutation_of_1_to_m(values_))
        throw StructuralError("values are not a permutation of 1.." + std::to_string(values_.size()));
}

Permutation Permutation::identity(std::size_t m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

BinaryMatrix permutation_to_matrix(const Permutation& p) {
    BinaryMatrix m(p.size());
    for (std::size_t i = 1; i <= p.size(); ++i) m.set(i, static_cast<std::size_t>(p.value(i)));
    return m;
}

}  // namespace bmat
