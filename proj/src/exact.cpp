#include "primepart/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace primepart {

namespace {

// One recursion step: counts[n] for n in [from, to], counts[0..from-1] final.
void recursion_range(std::vector<BigCount>& counts, std::uint64_t from, std::uint64_t to,
                     const SopfTable& sopf_table, const BuildProgress& progress,
                     std::uint64_t progress_stride) {
    mpz_class bracket, q, r;
    for (std::uint64_t n = from; n <= to; ++n) {
        bracket = sopf_table.values[n];
        for (std::uint64_t k = 1; k < n; ++k) {
            const std::uint64_t s = sopf_table.values[k];
            if (s != 0)
                mpz_addmul_ui(bracket.get_mpz_t(), counts[n - k].get_mpz_t(),
                              static_cast<unsigned long>(s));
        }
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), bracket.get_mpz_t(),
                       static_cast<unsigned long>(n));
        if (r != 0)
            throw std::logic_error("prime-partition recursion: inexact division at n = " +
                                   std::to_string(n) + ", remainder " + r.get_str());
        counts[n] = q;
        if (progress && progress_stride != 0 && n % progress_stride == 0)
            if (!progress(n))
                throw std::runtime_error("prime-partition recursion: aborted by caller at n = " +
                                         std::to_string(n));
    }
}

} // namespace

PartitionTable build_recursion(std::uint64_t n_max, const SopfTable& sopf_table,
                               const BuildProgress& progress, std::uint64_t progress_stride) {
    if (sopf_table.limit < n_max)
        throw std::invalid_argument("build_recursion: sopf table limit " +
                                    std::to_string(sopf_table.limit) + " < n_max " +
                                    std::to_string(n_max));
    PartitionTable t;
    t.n_max = n_max;
    t.algorithm = Algorithm::recursion;
    t.counts.assign(n_max + 1, BigCount(0));
    t.counts[0] = 1;
    if (n_max >= 1)
        recursion_range(t.counts, 1, n_max, sopf_table, progress, progress_stride);
    return t;
}

PartitionTable build_euler_dp(std::uint64_t n_max, const PrimeSieve& sieve) {
    if (n_max >= 2 && sieve.limit < n_max)
        throw std::invalid_argument("build_euler_dp: sieve limit " + std::to_string(sieve.limit) +
                                    " < n_max " + std::to_string(n_max));
    PartitionTable t;
    t.n_max = n_max;
    t.algorithm = Algorithm::euler_dp;
    t.counts.assign(n_max + 1, BigCount(0));
    t.counts[0] = 1;
    for (std::uint64_t p : sieve.primes) {
        if (p > n_max) break;
        for (std::uint64_t m = p; m <= n_max; ++m)
            t.counts[m] += t.counts[m - p];
    }
    return t;
}

void extend_recursion(PartitionTable& table, std::uint64_t new_n_max,
                      const SopfTable& sopf_table, const BuildProgress& progress,
                      std::uint64_t progress_stride) {
    if (new_n_max <= table.n_max) return;
    if (sopf_table.limit < new_n_max)
        throw std::invalid_argument("extend_recursion: sopf table limit " +
                                    std::to_string(sopf_table.limit) + " < n_max " +
                                    std::to_string(new_n_max));
    table.counts.resize(new_n_max + 1, BigCount(0));
    recursion_range(table.counts, table.n_max + 1, new_n_max, sopf_table, progress,
                    progress_stride);
    table.n_max = new_n_max;
    table.algorithm = Algorithm::recursion;
}

double log_big(const BigCount& value) {
    if (value <= 0) throw std::domain_error("log_big: value must be positive");
    // value = d * 2^e with d in [0.5, 1): exact bit count, leading 53 bits
    signed long e = 0;
    const double d = mpz_get_d_2exp(&e, value.get_mpz_t());
    return std::log(d) + static_cast<double>(e) * M_LN2;
}

double log_count(const PartitionTable& table, std::uint64_t n) {
    if (n > table.n_max)
        throw std::out_of_range("log_count: n = " + std::to_string(n) + " > n_max " +
                                std::to_string(table.n_max));
    if (table.counts[n] == 0)
        throw std::domain_error("log_count: P(" + std::to_string(n) + ") = 0, logarithm undefined");
    return log_big(table.counts[n]);
}

std::size_t digit_count(const BigCount& value) {
    // mpz_sizeinbase may overestimate by one; make it exact
    std::size_t size = mpz_sizeinbase(value.get_mpz_t(), 10);
    if (size > 1) {
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(size - 1));
        if (value < power) --size;
    }
    return size;
}

} // namespace primepart
