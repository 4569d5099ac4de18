#include "primepart/zfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "primepart/quadrature.hpp"

namespace primepart {

namespace {

// -ln(1 - e^{-y}), stable for all y > 0
double occ(double y) {
    return -std::log(-std::expm1(-y));
}

} // namespace

double compute_f2(std::int64_t k_max, bool tail_corrected) {
    if (k_max < 2) throw std::invalid_argument("compute_f2: k_max must be >= 2");
    double sum = 0.0;
    for (std::int64_t k = k_max; k >= 2; --k) {  // small terms first
        const double kd = static_cast<double>(k);
        sum += std::log(kd) / (kd * kd);
    }
    if (tail_corrected) {
        const double kd = static_cast<double>(k_max);
        sum += (std::log(kd) + 1.0) / kd;
    }
    return std::numbers::egamma * std::numbers::pi * std::numbers::pi / 6.0 + sum;
}

ZConstants ZConstants::converged() {
    static const double f2 = compute_f2(1000000, true);
    return {std::numbers::pi * std::numbers::pi / 6.0, f2, std::numbers::egamma, 1000000, true};
}

ZConstants ZConstants::paper() {
    return {std::numbers::pi * std::numbers::pi / 6.0, 1.88703, std::numbers::egamma, 10000,
            true};
}

LnZExact ln_z_exact(double beta, const PrimeSieve& sieve, double accuracy) {
    if (!(beta > 0.0)) throw std::domain_error("ln_z_exact: beta must be positive");
    const double limit = static_cast<double>(sieve.limit);
    // primes beyond the sieve are a subset of the integers beyond it, and
    // occ(y) <= e^{-y}/(1-e^{-y}): a hard bound, immune to prime-gap swings
    const double head = std::exp(-beta * (limit + 1.0));
    const double tail = head / ((-std::expm1(-beta)) * std::max(1.0 - head, 0.5));
    if (!(tail < accuracy)) {
        const double req = std::log(1.0 / (accuracy * (-std::expm1(-beta)))) / beta;
        const auto suggested = static_cast<std::uint64_t>(req * 1.05) + 16;
        throw SieveTooSmall("ln_z_exact: sieve limit " + std::to_string(sieve.limit) +
                                " leaves tail bound " + std::to_string(tail) +
                                " above requested accuracy; need limit of about " +
                                std::to_string(suggested),
                            suggested);
    }
    double sum = 0.0;
    for (auto it = sieve.primes.rbegin(); it != sieve.primes.rend(); ++it) {
        const double y = beta * static_cast<double>(*it);
        if (y > 745.0) continue;  // term underflows
        sum += occ(y);
    }
    return {sum, tail};
}

double ln_z_asymptotic(double beta, const ZConstants& constants) {
    if (!(beta > 0.0) || beta >= 1.0)
        throw std::domain_error("ln_z_asymptotic: requires 0 < beta < 1");
    const double lb = std::log(beta);
    return -constants.f1 / (beta * lb) + constants.f2 / (beta * lb * lb);
}

namespace {

// Integrand h(x)/ln(x) with h(x) = -ln(1-e^{-beta x}); regular at x -> 0+.
struct AvgIntegrand {
    double beta;

    double h(double x) const { return occ(beta * x); }

    double operator()(double x) const { return h(x) / std::log(x); }

    // paired integrand g(t) = F(1+t) + F(1-t), grouped so the 1/t poles and
    // the h difference cancel without subtractive loss:
    //   g = [h(1+t)-h(1-t)]/log1p(t) + h(1-t) * log1p(-t^2)/(log1p(t) log1p(-t))
    double paired(double t) const {
        const double denom = -std::expm1(-beta * (1.0 + t));
        const double dh = -std::log1p(2.0 * std::exp(-beta) * std::sinh(beta * t) / denom);
        const double lp = std::log1p(t);
        const double lm = std::log1p(-t);
        return dh / lp + h(1.0 - t) * std::log1p(-t * t) / (lp * lm);
    }
};

} // namespace

double ln_z_avg(double a, double beta, const QuadratureConfig& config) {
    if (!(beta > 0.0)) throw std::domain_error("ln_z_avg: beta must be positive");
    if (a == 1.0) throw std::domain_error("ln_z_avg: a = 1 sits on the pole");
    if (a < 0.0 || a > 2.0)
        throw std::domain_error("ln_z_avg: a must lie in [0,1) u (1,2]");
    if (config.epsilon_sequence.empty())
        throw std::invalid_argument("ln_z_avg: empty epsilon sequence");
    for (std::size_t i = 0; i < config.epsilon_sequence.size(); ++i) {
        const double e = config.epsilon_sequence[i];
        if (!(e > 0.0) || e >= 1.0 ||
            (i > 0 && e >= config.epsilon_sequence[i - 1]))
            throw std::invalid_argument(
                "ln_z_avg: epsilon sequence must be strictly decreasing in (0,1)");
    }

    const AvgIntegrand f{beta};
    const double cutoff =
        config.upper_cutoff > 0.0 ? config.upper_cutoff : std::max(45.0 / beta, 50.0);
    const double tol = config.panel_tolerance;

    // integrate a long decaying range in geometric blocks
    auto outer = [&](double lo, double hi) {
        double total = 0.0;
        double x = lo;
        while (x < hi) {
            const double next = std::min(hi, std::max(x * 4.0, x + 2.0));
            total += integrate([&](double u) { return f(u); }, x, next, tol * 1e-3, tol * 1e-3);
            x = next;
        }
        return total;
    };

    // the integrand is bounded at x -> 0+ but varies like 1/ln(x): grade the
    // panels geometrically toward the endpoint instead of letting the
    // adaptive bisection chase it
    auto left = [&](double lo, double hi) {
        double total = 0.0;
        double x = hi;
        while (x > std::max(lo, 1e-14)) {
            const double next = std::max(lo, 0.5 * x);
            total += integrate([&](double u) { return f(u); }, next, x, tol * 1e-3, tol * 1e-3);
            x = next;
        }
        if (lo < x) total += f(0.5 * (lo + x)) * (x - lo);  // sub-1e-14 stub
        return total;
    };

    if (a > 1.0) return outer(a, cutoff);  // no pole in the domain

    const double eps0 = std::min(config.epsilon_sequence.front(), 0.5);
    double total = left(a, 1.0 - eps0) + outer(1.0 + eps0, cutoff);

    // PV limit over the epsilon sequence: I_k adds the paired window
    // [eps_k, eps0]; convergence is judged on consecutive differences.
    double window = 0.0;
    double prev_eps = eps0;
    double last_delta = 0.0;
    bool converged = false;
    for (std::size_t i = 1; i < config.epsilon_sequence.size(); ++i) {
        const double eps = std::min(config.epsilon_sequence[i], eps0);
        const double delta = integrate([&](double t) { return f.paired(t); }, eps, prev_eps,
                                       tol * 1e-3, tol * 1e-3);
        window += delta;
        if (i > 1 && std::abs(delta) > std::abs(last_delta) && std::abs(delta) > tol)
            throw QuadratureError(
                "ln_z_avg: principal-value contributions oscillate (|delta| grew from " +
                std::to_string(std::abs(last_delta)) + " to " + std::to_string(std::abs(delta)) +
                " at eps = " + std::to_string(eps) + ")");
        last_delta = delta;
        prev_eps = eps;
        if (std::abs(delta) < tol * std::max(1.0, std::abs(total + window))) {
            converged = true;
        }
    }
    if (!converged)
        throw QuadratureError("ln_z_avg: epsilon sequence exhausted before convergence "
                              "(last delta " +
                              std::to_string(last_delta) + ")");
    // remaining stub [0, eps_last]: the paired integrand is smooth through 0
    window += integrate([&](double t) { return f.paired(t); }, 0.0, prev_eps, tol * 1e-3,
                        tol * 1e-3);
    return total + window;
}

} // namespace primepart
