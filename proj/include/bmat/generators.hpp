#pragma once

#include "bmat/big_count.hpp"
#include "bmat/pi_matrix.hpp"
#include "bmat/s_permutation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bmat {

/// All n! permutations of 1..n in lexicographic order.
std::vector<std::vector<int>> all_permutations(std::size_t n);

/// Lazy, single-pass stream over Π_n in lexicographic order of the concatenated
/// rows. The last row varies fastest. A shard fixes the first row.
class PiStream {
public:
    /// Full stream, with the first `skip` matrices dropped.
    explicit PiStream(std::size_t n, std::uint64_t skip = 0);

    /// Matrices whose first row is the `first_row_rank`-th permutation (0-based, lexicographic).
    static PiStream shard(std::size_t n, std::size_t first_row_rank);
    static std::size_t shard_count(std::size_t n);

    std::optional<PiMatrix> next();

    std::size_t order() const noexcept { return n_; }
    /// Number of matrices consumed so far, including skipped ones.
    std::uint64_t position() const noexcept { return position_; }

private:
    struct Bare {};
    PiStream(Bare, std::size_t n);
    void advance();

    std::size_t n_;
    std::vector<std::vector<int>> perms_;
    std::vector<std::size_t> digits_;  // permutation rank per row
    std::size_t fixed_rows_ = 0;
    bool done_ = false;
    std::uint64_t position_ = 0;
};

/// Every S-permutation matrix of order n exactly once: phi applied to each
/// element of PiStream. No filtering.
class BijectiveStream {
public:
    explicit BijectiveStream(std::size_t n, std::uint64_t skip = 0) : pis_(n, skip) {}
    static BijectiveStream shard(std::size_t n, std::size_t first_row_rank) {
        return BijectiveStream(PiStream::shard(n, first_row_rank));
    }

    std::optional<SPermutationMatrix> next();
    std::uint64_t position() const noexcept { return pis_.position(); }

private:
    explicit BijectiveStream(PiStream pis) : pis_(std::move(pis)) {}
    PiStream pis_;
};

inline constexpr std::size_t kNaiveMaxN = 3;

/// Filter-based generator: walks all (n²)! permutations of 1..n² in
/// lexicographic order, builds each permutation matrix, and keeps those with
/// one 1 per block. `skip` drops that many survivors.
class NaiveStream {
public:
    /// Throws GuardError when n > max_n.
    explicit NaiveStream(std::size_t n, std::uint64_t skip = 0, std::size_t max_n = kNaiveMaxN);

    std::optional<SPermutationMatrix> next();

    std::uint64_t candidates_examined() const noexcept { return examined_; }
    std::uint64_t survivors() const noexcept { return survivors_; }

private:
    std::size_t n_;
    std::vector<int> perm_;
    bool done_ = false;
    std::uint64_t examined_ = 0;
    std::uint64_t survivors_ = 0;
};

/// |Π_n| = (n!)^{2n}.
BigCount pi_cardinality(std::size_t n);

/// (n²)!, the number of candidates the naive generator examines.
BigCount naive_candidate_count(std::size_t n);

/// (n²)! / (n!)^{2n}, reduced.
BigRational naive_overhead_ratio(std::size_t n);

/// Runs every shard of BijectiveStream on up to `threads` workers and returns
/// the per-shard outputs, indexed by shard.
std::vector<std::vector<SPermutationMatrix>> generate_bijective_sharded(std::size_t n, unsigned threads);

/// Sharded count without materializing any matrix.
std::uint64_t count_bijective_sharded(std::size_t n, unsigned threads);

}  // namespace bmat
