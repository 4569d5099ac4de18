#ifndef PRIMEPART_RIEMANN_HPP
#define PRIMEPART_RIEMANN_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "primepart/primes.hpp"

namespace primepart {

/// Positive imaginary parts of the nontrivial zeta zeros, ascending.
/// Always input data, never computed here.
struct ZerosTable {
    std::vector<double> alphas;
    std::string source;

    std::size_t count() const { return alphas.size(); }
};

struct ZerosFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Plain text, one ordinate per line, ascending; '#' comments allowed.
/// Validates monotonicity and that the first zero is 14.134725 +- 1e-3.
ZerosTable load_zeros(const std::filesystem::path& path);

/// sum_{j=1}^{n_terms} (j-1)! x / ln(x)^j
double pi_refined(double x, int n_terms);

/// Average prime density 1/ln(x), x > 1.
double g_avg(double x);

/// J(x) = sum_{n>=1} (1/n) #{p : p^n <= x}; the n-sum ends at floor(log2 x).
double j_function(double x, const PrimeSieve& sieve);

/// Moebius inversion of J: pi(x) = sum_m mu(m)/m J(x^{1/m}).
double pi_from_j(double x, const PrimeSieve& sieve);

struct SmoothingConfig {
    double gamma = 0.1;
    int m_max = 14;
    int zeros_used = 3000;
};

/// Trace formula for the prime density,
///   g_sc(x) = 1/(x ln x) sum_m mu(m)/m [ x^{1/m} - 1/(x^{2/m}-1)
///             - 2 x^{1/(2m)} sum_alpha W cos((alpha/m) ln x) ],
/// W = 1 unsmoothed, else exp(-(gamma alpha/(m x))^2 / 2): Gaussian damping at
/// each term's local frequency alpha/(m x), the stationary-phase image of
/// convolving with a Gaussian of width gamma.
double g_semiclassical(double x, const ZerosTable& zeros, const SmoothingConfig& config,
                       bool smooth);

/// sum_p exp(-(x-p)^2/(2 gamma^2)) / (gamma sqrt(2 pi)) over primes within
/// 8 gamma of x.
double gaussian_comb(double x, const PrimeSieve& sieve, double gamma);

} // namespace primepart

#endif
