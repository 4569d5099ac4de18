#ifndef PRIMEPART_ZFUNC_HPP
#define PRIMEPART_ZFUNC_HPP

#include <stdexcept>
#include <vector>

#include "primepart/primes.hpp"

namespace primepart {

/// Tail-corrected sum C*pi^2/6 + sum_{k=2}^{k_max} ln(k)/k^2
/// (+ integral tail (ln k_max + 1)/k_max when tail_corrected).
double compute_f2(std::int64_t k_max, bool tail_corrected);

struct ZConstants {
    double f1;             // pi^2/6
    double f2;             // see compute_f2
    double euler_c;        // full double precision, not the paper's 6 digits
    int f2_sum_terms;
    bool f2_tail_corrected;

    /// Converged default: k_max = 10^6, tail-corrected.
    static ZConstants converged();
    /// f2 pinned to the literature value 1.88703.
    static ZConstants paper();
};

struct QuadratureConfig {
    // strictly decreasing toward 0, all < 1; first entry is the pairing window.
    // consecutive windows shrink the remaining principal-value stub linearly,
    // so the tail of the sequence must reach panel_tolerance / g(0) ~ 1e-10
    std::vector<double> epsilon_sequence = {0.5,  0.1,  0.01, 1e-3, 1e-4, 1e-5,
                                            1e-6, 1e-7, 1e-8, 1e-9, 1e-10};
    double upper_cutoff = 0.0;    // 0 = automatic (about 45/beta)
    double panel_tolerance = 1e-9;
};

struct LnZExact {
    double value;
    double tail_bound;  // certified bound on the truncated prime tail
};

struct SieveTooSmall : std::runtime_error {
    std::uint64_t required_limit;
    SieveTooSmall(const std::string& msg, std::uint64_t required)
        : std::runtime_error(msg), required_limit(required) {}
};

/// -sum_p ln(1 - e^{-beta p}) over sieve primes, summed ascending in e^{-beta p}
/// (largest primes first). Throws SieveTooSmall when the analytic tail bound
/// e^{-beta L}/(beta ln L) exceeds `accuracy` (absolute).
LnZExact ln_z_exact(double beta, const PrimeSieve& sieve, double accuracy = 1e-9);

/// Principal-value integral -PV int_a^inf ln(1-e^{-beta x})/ln(x) dx for
/// a in [0,1) u (1,2]. The pole at x=1 is handled by pairing x=1-t with x=1+t,
/// where the 1/ln singular parts cancel analytically.
double ln_z_avg(double a, double beta, const QuadratureConfig& config = {});

/// -f1/(beta ln beta) + f2/(beta ln^2 beta); requires 0 < beta < 1.
double ln_z_asymptotic(double beta, const ZConstants& constants);

} // namespace primepart

#endif
