#include "primepart/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace primepart {

ZerosTable load_zeros(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ZerosFileError("cannot open zeros file: " + path.string());
    ZerosTable t;
    t.source = path.string();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        double v = 0.0;
        std::istringstream ss(line);
        if (!(ss >> v) || !(v > 0.0))
            throw ZerosFileError("zeros file " + path.string() + ": parse failure at line " +
                                 std::to_string(lineno));
        std::string rest;
        if (ss >> rest)
            throw ZerosFileError("zeros file " + path.string() + ": trailing data at line " +
                                 std::to_string(lineno));
        if (!t.alphas.empty() && v <= t.alphas.back())
            throw ZerosFileError("zeros file " + path.string() +
                                 ": entries not strictly increasing at line " +
                                 std::to_string(lineno));
        t.alphas.push_back(v);
    }
    if (in.bad()) throw ZerosFileError("read failure on zeros file: " + path.string());
    if (t.alphas.empty())
        throw ZerosFileError("zeros file " + path.string() + ": no zeros found");
    if (std::abs(t.alphas.front() - 14.134725) > 1e-3)
        throw ZerosFileError("zeros file " + path.string() + ": first zero " +
                             std::to_string(t.alphas.front()) +
                             " is not the first zeta zero (14.134725 +- 1e-3)");
    return t;
}

double pi_refined(double x, int n_terms) {
    if (!(x > 1.0)) throw std::domain_error("pi_refined: requires x > 1");
    if (n_terms < 1) throw std::invalid_argument("pi_refined: n_terms must be >= 1");
    const double L = std::log(x);
    double sum = 0.0;
    double factorial = 1.0;  // (j-1)!
    double power = L;        // ln(x)^j
    for (int j = 1; j <= n_terms; ++j) {
        sum += factorial * x / power;
        factorial *= j;
        power *= L;
    }
    return sum;
}

double g_avg(double x) {
    if (!(x > 1.0)) throw std::domain_error("g_avg: requires x > 1");
    return 1.0 / std::log(x);
}

namespace {

// largest integer r with r^n <= x, robust against pow() rounding
std::uint64_t integer_root(double x, int n) {
    double r = std::floor(std::pow(x, 1.0 / n));
    auto ipow_le = [&](std::uint64_t base) {
        double acc = 1.0;
        for (int i = 0; i < n; ++i) {
            acc *= static_cast<double>(base);
            if (acc > x) return false;
        }
        return true;
    };
    auto ri = static_cast<std::uint64_t>(std::max(r, 0.0));
    while (!ipow_le(ri) && ri > 0) --ri;
    while (ipow_le(ri + 1)) ++ri;
    return ri;
}

// Moebius for the small trace-formula indices; no sieve needed
int moebius_small(int m) {
    int factors = 0;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            ++factors;
        }
    }
    if (m > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

} // namespace

double j_function(double x, const PrimeSieve& sieve) {
    if (!(x >= 1.0)) throw std::domain_error("j_function: requires x >= 1");
    if (x > static_cast<double>(sieve.limit))
        throw std::out_of_range("j_function: x = " + std::to_string(x) + " beyond sieve limit " +
                                std::to_string(sieve.limit));
    double total = 0.0;
    for (int n = 1; std::exp2(n) <= x + 0.5; ++n) {
        const std::uint64_t r = integer_root(x, n);
        if (r < 2) break;
        total += static_cast<double>(sieve.prime_count(static_cast<double>(r))) / n;
    }
    return total;
}

double pi_from_j(double x, const PrimeSieve& sieve) {
    if (!(x >= 1.0)) throw std::domain_error("pi_from_j: requires x >= 1");
    double total = 0.0;
    for (int m = 1; std::exp2(m) <= x + 0.5; ++m) {
        const int mu = moebius_small(m);
        if (mu == 0) continue;
        total += static_cast<double>(mu) / m * j_function(std::pow(x, 1.0 / m), sieve);
    }
    return total;
}

double g_semiclassical(double x, const ZerosTable& zeros, const SmoothingConfig& config,
                       bool smooth) {
    if (!(x > 1.0)) throw std::domain_error("g_semiclassical: requires x > 1");
    if (config.zeros_used < 1 ||
        static_cast<std::size_t>(config.zeros_used) > zeros.count())
        throw std::out_of_range("g_semiclassical: zeros_used = " +
                                std::to_string(config.zeros_used) + " but table has " +
                                std::to_string(zeros.count()));
    if (config.m_max < 1) throw std::invalid_argument("g_semiclassical: m_max must be >= 1");
    const double lx = std::log(x);
    double sum = 0.0;
    for (int m = 1; m <= config.m_max; ++m) {
        const int mu = moebius_small(m);
        if (mu == 0) continue;
        const double xm = std::pow(x, 1.0 / m);
        double osc = 0.0;
        for (int k = 0; k < config.zeros_used; ++k) {
            const double alpha = zeros.alphas[k];
            const double phase = alpha / m * lx;
            if (smooth) {
                const double arg = config.gamma * alpha / (m * x);
                const double w = std::exp(-0.5 * arg * arg);
                if (w < 1e-18) break;  // zeros ascend, damping only grows
                osc += w * std::cos(phase);
            } else {
                osc += std::cos(phase);
            }
        }
        const double term = xm - 1.0 / (xm * xm - 1.0) - 2.0 * std::sqrt(xm) * osc;
        sum += static_cast<double>(mu) / m * term;
    }
    return sum / (x * lx);
}

double gaussian_comb(double x, const PrimeSieve& sieve, double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("gaussian_comb: gamma must be positive");
    const double lo = x - 8.0 * gamma;
    const double hi = x + 8.0 * gamma;
    auto begin = std::lower_bound(sieve.primes.begin(), sieve.primes.end(),
                                  static_cast<std::uint64_t>(std::max(lo, 0.0)));
    double sum = 0.0;
    for (auto it = begin; it != sieve.primes.end() && static_cast<double>(*it) <= hi; ++it) {
        const double d = (x - static_cast<double>(*it)) / gamma;
        sum += std::exp(-0.5 * d * d);
    }
    return sum / (gamma * std::sqrt(2.0 * std::numbers::pi));
}

} // namespace primepart
