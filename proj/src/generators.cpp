#include "bmat/generators.hpp"

#include "bmat/errors.hpp"
#include "bmat/permutation.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

namespace bmat {

std::vector<std::vector<int>> all_permutations(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

PiStream::PiStream(Bare, std::size_t n) : n_(n) {
    if (n == 0) throw StructuralError("Π_n requires n >= 1");
    perms_ = all_permutations(n);
    digits_.assign(2 * n, 0);
}

PiStream::PiStream(std::size_t n, std::uint64_t skip) : PiStream(Bare{}, n) {
    // Decode skip in base n! (last row is least significant).
    const std::uint64_t base = perms_.size();
    std::uint64_t rest = skip;
    for (std::size_t i = digits_.size(); i-- > 0 && rest > 0;) {
        digits_[i] = static_cast<std::size_t>(rest % base);
        rest /= base;
    }
    if (rest > 0) done_ = true;  // skip >= |Π_n|
    position_ = skip;
}

PiStream PiStream::shard(std::size_t n, std::size_t first_row_rank) {
    PiStream s(Bare{}, n);
    if (first_row_rank >= s.perms_.size())
        throw StructuralError("shard " + std::to_string(first_row_rank) + " outside 0.." +
                              std::to_string(s.perms_.size() - 1));
    s.digits_[0] = first_row_rank;
    s.fixed_rows_ = 1;
    return s;
}

std::size_t PiStream::shard_count(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

void PiStream::advance() {
    for (std::size_t i = digits_.size(); i-- > fixed_rows_;) {
        if (++digits_[i] < perms_.size()) return;
        digits_[i] = 0;
    }
    done_ = true;
}

std::optional<PiMatrix> PiStream::next() {
    if (done_) return std::nullopt;
    std::vector<int> entries;
    entries.reserve(2 * n_ * n_);
    for (auto d : digits_) entries.insert(entries.end(), perms_[d].begin(), perms_[d].end());
    advance();
    ++position_;
    return PiMatrix(n_, std::move(entries));
}

std::optional<SPermutationMatrix> BijectiveStream::next() {
    auto p = pis_.next();
    if (!p) return std::nullopt;
    return phi(*p);
}

NaiveStream::NaiveStream(std::size_t n, std::uint64_t skip, std::size_t max_n) : n_(n) {
    if (n == 0) throw StructuralError("naive generation requires n >= 1");
    if (n > max_n)
        throw GuardError("naive generation: n = " + std::to_string(n) + " exceeds the size guard n <= " +
                         std::to_string(max_n) + " ((n²)! = " + to_decimal(naive_candidate_count(n)) +
                         " candidates); use --force to override");
    perm_.resize(n * n);
    std::iota(perm_.begin(), perm_.end(), 1);
    for (std::uint64_t i = 0; i < skip && next(); ++i) {
    }
}

std::optional<SPermutationMatrix> NaiveStream::next() {
    while (!done_) {
        // Steps 2 and 3: the permutation matrix, then the one-per-block check.
        const BinaryMatrix a = permutation_to_matrix(Permutation(perm_));
        ++examined_;
        bool ok = true;
        for (std::size_t s = 0; s < n_ && ok; ++s) {
            for (std::size_t t = 0; t < n_ && ok; ++t) {
                std::size_t ones = 0;
                for (std::size_t i = 1; i <= n_; ++i)
                    for (std::size_t j = 1; j <= n_; ++j) ones += a.get(s * n_ + i, t * n_ + j) ? 1 : 0;
                ok = ones == 1;
            }
        }
        std::vector<int> cols = perm_;
        done_ = !std::next_permutation(perm_.begin(), perm_.end());
        if (ok) {
            ++survivors_;
            return SPermutationBuilder::assume_valid(n_, std::move(cols));
        }
    }
    return std::nullopt;
}

BigCount pi_cardinality(std::size_t n) {
    return boost::multiprecision::pow(factorial(static_cast<unsigned>(n)), static_cast<unsigned>(2 * n));
}

BigCount naive_candidate_count(std::size_t n) { return factorial(static_cast<unsigned>(n * n)); }

BigRational naive_overhead_ratio(std::size_t n) {
    return BigRational(naive_candidate_count(n), pi_cardinality(n));
}

namespace {

template <typename PerShard>
void run_shards(std::size_t n, unsigned threads, PerShard&& per_shard) {
    const std::size_t shards = PiStream::shard_count(n);
    std::atomic<std::size_t> next_shard{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shards)));
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t s; (s = next_shard.fetch_add(1)) < shards;) per_shard(s);
        });
}

}  // namespace

std::vector<std::vector<SPermutationMatrix>> generate_bijective_sharded(std::size_t n, unsigned threads) {
    std::vector<std::vector<SPermutationMatrix>> out(PiStream::shard_count(n));
    run_shards(n, threads, [&](std::size_t shard) {
        auto stream = BijectiveStream::shard(n, shard);
        while (auto m = stream.next()) out[shard].push_back(std::move(*m));
    });
    return out;
}

std::uint64_t count_bijective_sharded(std::size_t n, unsigned threads) {
    std::atomic<std::uint64_t> total{0};
    run_shards(n, threads, [&](std::size_t shard) {
        auto stream = BijectiveStream::shard(n, shard);
        std::uint64_t local = 0;
        while (stream.next()) ++local;
        total += local;
    });
    return total.load();
}

}  // namespace bmat
