#ifndef PRIMEPART_PRIMES_HPP
#define PRIMEPART_PRIMES_HPP

#include <cstdint>
#include <vector>

namespace primepart {

/// Linear (smallest-prime-factor) sieve. Immutable after construction;
/// safe for concurrent read access.
struct PrimeSieve {
    std::uint64_t limit = 0;
    std::vector<bool> is_prime;                 // is_prime[k], 0..limit
    std::vector<std::uint32_t> smallest_factor; // 0 for k < 2
    std::vector<std::uint64_t> primes;          // ascending

    /// Number of primes <= x (x may exceed limit only if x <= limit, enforced by caller).
    std::uint64_t prime_count(double x) const;
};

/// Builds the sieve in O(limit). Throws std::invalid_argument for limit < 2,
/// std::length_error if the tables would exceed memory_budget_bytes.
PrimeSieve build_sieve(std::uint64_t limit,
                       std::uint64_t memory_budget_bytes = std::uint64_t(6) << 30);

/// Sum of the distinct primes dividing n, each counted once; sopf(1) = 0.
std::uint64_t sopf(std::uint64_t n, const PrimeSieve& sieve);

/// Moebius function: mu(1)=1, 0 on non-squarefree m, else (-1)^(#prime factors).
int moebius(std::uint64_t m, const PrimeSieve& sieve);

/// Table of sopf(n) for n = 0..limit (entry 0 unused, set to 0).
struct SopfTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> values;
};

SopfTable build_sopf_table(const PrimeSieve& sieve);

} // namespace primepart

#endif
