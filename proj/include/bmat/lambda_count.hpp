#pragma once

#include "bmat/big_count.hpp"

#include <cstddef>
#include <vector>

namespace bmat {

// λ(n,k): number of n×n binary matrices with exactly k ones in every row and column.
// μ(n,k): number of n²×n² binary matrices with k ones in every row, column and n×n block.

/// n!
BigCount lambda_k1(unsigned n);

/// λ(n,2) as a sum over all solutions of 2x_2 + 3x_3 + ... + n x_n = n of
/// (n!)² / Π x_r! (2r)^{x_r}, accumulated as an exact rational.
BigCount lambda_k2_sum(unsigned n);

/// λ(n,2) = ½ n(n-1)² [(2n-3) λ(n-2,2) + (n-2)² λ(n-3,2)], n ≥ 4; seeds 0, 1, 6.
BigCount lambda_k2_anand(unsigned n);

/// λ(n,2) = (n-1) n λ(n-1,2) + ((n-1)² n / 2) λ(n-2,2), n ≥ 3; seeds 0, 1.
BigCount lambda_k2_good(unsigned n);

/// Coupled system for λ(·,2) and the auxiliary sequence π(·).
struct LambdaK2System {
    std::vector<BigCount> lambda;  ///< lambda[m] = λ(m,2), index 0 unused
    std::vector<BigCount> pi;      ///< pi[m] = π(m), index 0 unused
};

/// Tables for indices 1..n of the coupled recursion
///   λ(m+1,2) = m(2m-1) λ(m,2) + m² λ(m-1,2) − π(m+1),  m ≥ 2
///   π(m+1)   = m²(m-1)²/4 · [8(m-2)(m-3) λ(m-2,2) + (m-2)² λ(m-3,2) − 4π(m-1)],  m ≥ 4
/// with λ(1,2)=0, λ(2,2)=1, π(1)=π(2)=π(3)=0, π(4)=9.
LambdaK2System lambda_k2_system_tables(unsigned n);

BigCount lambda_k2_system(unsigned n);

/// λ(n,3) = (n!²/6ⁿ) Σ_{α+β+γ=n} (−1)^β (β+3γ)! 2^α 3^β / (α! β! γ!² 6^γ), exact rational.
/// Throws ConsistencyError if the total is not a nonnegative integer.
BigCount lambda_k3_explicit(unsigned n);

/// Default size guard for lambda_brute.
inline constexpr unsigned kLambdaBruteMaxN = 7;

/// Backtracking count of n×n matrices with all row and column sums equal to k.
/// Throws GuardError when n > max_n (pass a larger max_n to override).
BigCount lambda_brute(unsigned n, unsigned k, unsigned max_n = kLambdaBruteMaxN);

/// (n!)^{2n}
BigCount mu_k1(unsigned n);

inline constexpr unsigned kMuBruteMaxN = 2;

/// Backtracking count of n²×n² matrices with all row, column and block sums equal to k.
BigCount mu_brute(unsigned n, unsigned k, unsigned max_n = kMuBruteMaxN);

}  // namespace bmat
