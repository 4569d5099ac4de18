#ifndef PRIMEPART_EXACT_HPP
#define PRIMEPART_EXACT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primepart/primes.hpp"

namespace primepart {

/// Exact prime-partition count; never rounded.
using BigCount = mpz_class;

enum class Algorithm : std::uint8_t { recursion = 0, euler_dp = 1 };

struct CheckpointMeta {
    std::string source_path;
    std::uint64_t resumed_from = 0; // n_max of the loaded table
};

/// P(0..n_max). counts[0] = 1, counts[1] = 0. Single-writer during build,
/// immutable and freely shared afterwards.
struct PartitionTable {
    std::uint64_t n_max = 0;
    std::vector<BigCount> counts;
    Algorithm algorithm = Algorithm::euler_dp;
    std::optional<CheckpointMeta> checkpoint_meta;
};

/// Called every `stride` entries during a recursion build; returning false aborts.
using BuildProgress = std::function<bool(std::uint64_t n_done)>;

/// P(n) = (1/n) [ S(n) + sum_{k=1}^{n-1} S(k) P(n-k) ].  The division by n is
/// exact; a nonzero remainder aborts with std::logic_error carrying n and the
/// remainder.
PartitionTable build_recursion(std::uint64_t n_max, const SopfTable& sopf_table,
                               const BuildProgress& progress = {},
                               std::uint64_t progress_stride = 10000);

/// Coin-style DP over the prime parts, ascending primes, ascending amounts.
PartitionTable build_euler_dp(std::uint64_t n_max, const PrimeSieve& sieve);

/// Extends an existing table to new_n_max using the recursion (the DP's
/// intermediate state is not recoverable from final counts).
void extend_recursion(PartitionTable& table, std::uint64_t new_n_max,
                      const SopfTable& sopf_table, const BuildProgress& progress = {},
                      std::uint64_t progress_stride = 10000);

/// ln P(n) from the integer's leading bits and bit count; >= 12 significant
/// digits. Throws std::domain_error when counts[n] = 0 (only n = 1).
double log_count(const PartitionTable& table, std::uint64_t n);

/// ln of an arbitrary nonnegative big integer (>= 1).
double log_big(const BigCount& value);

/// Decimal digit count.
std::size_t digit_count(const BigCount& value);

} // namespace primepart

#endif
