#include "primepart/primes.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace primepart {

std::uint64_t PrimeSieve::prime_count(double x) const {
    if (x < 2.0) return 0;
    // primes is ascending; count entries <= x
    auto it = std::upper_bound(primes.begin(), primes.end(), static_cast<std::uint64_t>(x));
    return static_cast<std::uint64_t>(it - primes.begin());
}

PrimeSieve build_sieve(std::uint64_t limit, std::uint64_t memory_budget_bytes) {
    if (limit < 2)
        throw std::invalid_argument("build_sieve: limit must be >= 2, got " + std::to_string(limit));
    if (limit >= std::numeric_limits<std::uint32_t>::max())
        throw std::length_error("build_sieve: limit too large for 32-bit factor table");
    // smallest_factor dominates; is_prime is a bit array, primes ~ limit/ln(limit)
    const std::uint64_t approx_bytes = limit * 4 + limit / 8 + (limit / 10) * 8;
    if (approx_bytes > memory_budget_bytes)
        throw std::length_error("build_sieve: limit " + std::to_string(limit) +
                                " exceeds memory budget (" + std::to_string(approx_bytes) +
                                " > " + std::to_string(memory_budget_bytes) + " bytes)");

    PrimeSieve s;
    s.limit = limit;
    s.smallest_factor.assign(limit + 1, 0);
    s.is_prime.assign(limit + 1, false);

    // linear sieve: every composite is struck exactly once, by its smallest factor
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (s.smallest_factor[i] == 0) {
            s.smallest_factor[i] = static_cast<std::uint32_t>(i);
            s.primes.push_back(i);
        }
        for (std::uint64_t p : s.primes) {
            if (p > s.smallest_factor[i] || i * p > limit) break;
            s.smallest_factor[i * p] = static_cast<std::uint32_t>(p);
        }
    }
    for (std::uint64_t p : s.primes) s.is_prime[p] = true;
    return s;
}

namespace {

void check_range(std::uint64_t n, const PrimeSieve& sieve, const char* who) {
    if (n < 1 || n > sieve.limit)
        throw std::out_of_range(std::string(who) + ": n = " + std::to_string(n) +
                                " outside sieve range [1, " + std::to_string(sieve.limit) +
                                "]; rebuild the sieve with a larger limit");
}

} // namespace

std::uint64_t sopf(std::uint64_t n, const PrimeSieve& sieve) {
    check_range(n, sieve, "sopf");
    std::uint64_t sum = 0;
    while (n > 1) {
        const std::uint64_t p = sieve.smallest_factor[n];
        sum += p;
        while (n % p == 0) n /= p;
    }
    return sum;
}

int moebius(std::uint64_t m, const PrimeSieve& sieve) {
    check_range(m, sieve, "moebius");
    int factors = 0;
    while (m > 1) {
        const std::uint64_t p = sieve.smallest_factor[m];
        m /= p;
        if (m % p == 0) return 0; // squared factor
        ++factors;
    }
    return (factors % 2 == 0) ? 1 : -1;
}

SopfTable build_sopf_table(const PrimeSieve& sieve) {
    SopfTable t;
    t.limit = sieve.limit;
    t.values.assign(sieve.limit + 1, 0);
    for (std::uint64_t n = 2; n <= sieve.limit; ++n) {
        const std::uint64_t p = sieve.smallest_factor[n];
        std::uint64_t m = n / p;
        // strip remaining powers of p, then reuse the already-computed tail
        while (m % p == 0) m /= p;
        t.values[n] = t.values[m] + p;
    }
    return t;
}

} // namespace primepart
