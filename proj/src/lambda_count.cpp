#include "bmat/lambda_count.hpp"

#include "bmat/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

namespace bmat {

namespace {

void require_positive(unsigned n, const char* what) {
    if (n == 0) throw StructuralError(std::string(what) + ": n must be positive");
}

BigCount ipow(const BigCount& base, unsigned e) { return boost::multiprecision::pow(base, e); }

BigCount require_integral(const BigRational& total, const char* what) {
    if (boost::multiprecision::denominator(total) != 1)
        throw ConsistencyError(std::string(what) + ": exact total is not an integer");
    BigCount v = boost::multiprecision::numerator(total);
    if (v < 0) throw ConsistencyError(std::string(what) + ": exact total is negative");
    return v;
}

// Enumerates the multiplicities x_2..x_n with 2x_2 + ... + n x_n = n,
// largest part first, and feeds each solution to visit.
void for_each_part_multiplicity(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> x(n + 1, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned part, unsigned remaining) {
        if (remaining == 0) {
            visit(x);
            return;
        }
        if (part < 2) return;
        for (unsigned mult = remaining / part + 1; mult-- > 0;) {
            x[part] = mult;
            rec(part - 1, remaining - mult * part);
        }
        x[part] = 0;
    };
    rec(n, n);
}

}  // namespace

BigCount factorial(unsigned n) {
    BigCount f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigCount lambda_k1(unsigned n) {
    require_positive(n, "lambda_k1");
    return factorial(n);
}

BigCount lambda_k2_sum(unsigned n) {
    require_positive(n, "lambda_k2_sum");
    const BigCount nf2 = factorial(n) * factorial(n);
    BigRational total = 0;
    for_each_part_multiplicity(n, [&](const std::vector<unsigned>& x) {
        BigCount denom = 1;
        for (unsigned r = 2; r <= n; ++r)
            if (x[r] != 0) denom *= factorial(x[r]) * ipow(BigCount(2 * r), x[r]);
        total += BigRational(nf2, denom);
    });
    return require_integral(total, "lambda_k2_sum");
}

BigCount lambda_k2_anand(unsigned n) {
    require_positive(n, "lambda_k2_anand");
    std::vector<BigCount> lam(std::max(n, 3u) + 1);
    lam[1] = 0;
    lam[2] = 1;
    lam[3] = 6;
    for (unsigned m = 4; m <= n; ++m) {
        const BigCount bracket = BigCount(2 * m - 3) * lam[m - 2] + BigCount((m - 2) * (m - 2)) * lam[m - 3];
        const BigCount twice = BigCount(m) * (m - 1) * (m - 1) * bracket;
        if (twice % 2 != 0) throw ConsistencyError("lambda_k2_anand: odd numerator");
        lam[m] = twice / 2;
    }
    return lam[n];
}

BigCount lambda_k2_good(unsigned n) {
    require_positive(n, "lambda_k2_good");
    std::vector<BigCount> lam(std::max(n, 2u) + 1);
    lam[1] = 0;
    lam[2] = 1;
    for (unsigned m = 3; m <= n; ++m) {
        // (m-1)² m is always even: either m or m-1 is.
        const BigCount half = BigCount(m - 1) * (m - 1) * m / 2;
        lam[m] = BigCount(m - 1) * m * lam[m - 1] + half * lam[m - 2];
    }
    return lam[n];
}

LambdaK2System lambda_k2_system_tables(unsigned n) {
    require_positive(n, "lambda_k2_system");
    const unsigned top = std::max(n, 4u);
    LambdaK2System sys;
    sys.lambda.assign(top + 1, 0);
    sys.pi.assign(top + 1, 0);
    sys.lambda[1] = 0;
    sys.lambda[2] = 1;
    sys.pi[4] = 9;
    // Step m produces π(m+1) (for m ≥ 4) and then λ(m+1,2).
    for (unsigned m = 2; m + 1 <= top; ++m) {
        if (m >= 4) {
            const BigCount bracket = BigCount(8) * (m - 2) * (m - 3) * sys.lambda[m - 2] +
                                     BigCount(m - 2) * (m - 2) * sys.lambda[m - 3] - 4 * sys.pi[m - 1];
            const BigCount scaled = BigCount(m) * m * (m - 1) * (m - 1) * bracket;
            if (scaled % 4 != 0) throw ConsistencyError("lambda_k2_system: π term not integral");
            sys.pi[m + 1] = scaled / 4;
        }
        sys.lambda[m + 1] =
            BigCount(m) * (2 * m - 1) * sys.lambda[m] + BigCount(m) * m * sys.lambda[m - 1] - sys.pi[m + 1];
        if (sys.lambda[m + 1] < 0) throw ConsistencyError("lambda_k2_system: negative count");
    }
    sys.lambda.resize(n + 1);
    sys.pi.resize(n + 1);
    return sys;
}

BigCount lambda_k2_system(unsigned n) { return lambda_k2_system_tables(n).lambda[n]; }

BigCount lambda_k3_explicit(unsigned n) {
    require_positive(n, "lambda_k3_explicit");
    BigRational sum = 0;
    // α descending, then β descending; γ = n − α − β.
    for (unsigned alpha = n + 1; alpha-- > 0;) {
        for (unsigned beta = n - alpha + 1; beta-- > 0;) {
            const unsigned gamma = n - alpha - beta;
            BigCount num = factorial(beta + 3 * gamma) * ipow(2, alpha) * ipow(3, beta);
            if (beta % 2 == 1) num = -num;
            const BigCount gf = factorial(gamma);
            const BigCount den = factorial(alpha) * factorial(beta) * gf * gf * ipow(6, gamma);
            sum += BigRational(num, den);
        }
    }
    const BigCount nf = factorial(n);
    const BigRational total = sum * BigRational(nf * nf, ipow(6, n));
    return require_integral(total, "lambda_k3_explicit");
}

namespace {

// Row-by-row backtracking shared by the λ and μ oracles. Each row is a bitmask
// with exactly k bits drawn from the precomputed candidate list; col_sum (and,
// for μ, block_sum) are bounded by k, and every column must still be able to
// reach k with the rows that remain.
struct RowSumSearch {
    unsigned side;
    unsigned k;
    unsigned block;  // 0 disables block constraints
    std::vector<std::uint32_t> rows;
    std::vector<unsigned> col_sum;
    std::vector<unsigned> block_sum;
    BigCount count = 0;

    RowSumSearch(unsigned side_, unsigned k_, unsigned block_) : side(side_), k(k_), block(block_) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << side); ++mask)
            if (static_cast<unsigned>(std::popcount(mask)) == k) rows.push_back(mask);
        col_sum.assign(side, 0);
        if (block) block_sum.assign(block * block, 0);
    }

    bool place(unsigned row, std::uint32_t mask) {
        bool ok = true;
        for (unsigned j = 0; j < side; ++j) {
            if (!(mask >> j & 1u)) continue;
            if (++col_sum[j] > k) ok = false;
            if (block && ++block_sum[(row / block) * block + j / block] > k) ok = false;
        }
        return ok;
    }

    void unplace(unsigned row, std::uint32_t mask) {
        for (unsigned j = 0; j < side; ++j) {
            if (!(mask >> j & 1u)) continue;
            --col_sum[j];
            if (block) --block_sum[(row / block) * block + j / block];
        }
    }

    bool feasible(unsigned next_row) const {
        const unsigned remaining = side - next_row;
        for (unsigned j = 0; j < side; ++j)
            if (col_sum[j] + remaining < k) return false;
        if (block && next_row % block == 0) {
            // A completed band of rows must have saturated every block in it.
            const unsigned band = next_row / block;
            if (band > 0)
                for (unsigned t = 0; t < block; ++t)
                    if (block_sum[(band - 1) * block + t] != k) return false;
        }
        return true;
    }

    void run(unsigned row) {
        if (row == side) {
            for (unsigned j = 0; j < side; ++j)
                if (col_sum[j] != k) return;
            for (auto b : block_sum)
                if (b != k) return;
            ++count;
            return;
        }
        for (auto mask : rows) {
            if (place(row, mask) && feasible(row + 1)) run(row + 1);
            unplace(row, mask);
        }
    }
};

}  // namespace

BigCount lambda_brute(unsigned n, unsigned k, unsigned max_n) {
    require_positive(n, "lambda_brute");
    if (k < 1 || k > n) throw StructuralError("lambda_brute: k must lie in 1..n");
    if (n > max_n)
        throw GuardError("lambda_brute: n = " + std::to_string(n) + " exceeds the size guard n <= " +
                         std::to_string(max_n) + "; raise the limit explicitly (CLI: --force) to run anyway");
    if (n > 31) throw GuardError("lambda_brute: rows are 32-bit masks, n must be <= 31");
    RowSumSearch search(n, k, 0);
    search.run(0);
    return search.count;
}

BigCount mu_k1(unsigned n) {
    require_positive(n, "mu_k1");
    return boost::multiprecision::pow(factorial(n), 2 * n);
}

BigCount mu_brute(unsigned n, unsigned k, unsigned max_n) {
    require_positive(n, "mu_brute");
    if (k < 1 || k > n * n) throw StructuralError("mu_brute: k must lie in 1..n²");
    if (n > max_n)
        throw GuardError("mu_brute: n = " + std::to_string(n) + " exceeds the size guard n <= " +
                         std::to_string(max_n) + "; raise the limit explicitly (CLI: --force) to run anyway");
    if (n * n > 31) throw GuardError("mu_brute: rows are 32-bit masks, n² must be <= 31");
    RowSumSearch search(n * n, k, n);
    search.run(0);
    return search.count;
}

}  // namespace bmat
