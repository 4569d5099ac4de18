#include "primepart/saddle.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace primepart {

namespace {

void check_beta(double beta, const char* who) {
    if (!(beta > 0.0) || beta >= 1.0)
        throw std::domain_error(std::string(who) + ": beta must lie in (0,1), got " +
                                std::to_string(beta));
}

} // namespace

double entropy(double beta, double energy, const ZConstants& c) {
    check_beta(beta, "entropy");
    if (!(energy > 0.0)) throw std::domain_error("entropy: energy must be positive");
    const double lb = std::log(beta);
    return beta * energy - c.f1 / (beta * lb) + c.f2 / (beta * lb * lb);
}

double entropy_d1(double beta, double energy, const ZConstants& c) {
    check_beta(beta, "entropy_d1");
    const double lb = std::log(beta);
    const double b2 = beta * beta;
    return energy + c.f1 / (b2 * lb) + (c.f1 - c.f2) / (b2 * lb * lb);
}

double entropy_d2(double beta, double energy, const ZConstants& c) {
    check_beta(beta, "entropy_d2");
    (void)energy;
    const double lb = std::log(beta);
    const double b3 = beta * beta * beta;
    return -2.0 * c.f1 / (b3 * lb) - (3.0 * c.f1 - 2.0 * c.f2) / (b3 * lb * lb);
}

double beta0_lo(double energy) {
    if (!(energy > 1.0))
        throw std::domain_error("beta0_lo: requires energy > 1 (ln E must be positive)");
    return std::numbers::pi / std::sqrt(3.0 * energy * std::log(energy));
}

double beta0_nlo(double energy, const ZConstants& c) {
    if (!(energy > 1.0))
        throw std::domain_error("beta0_nlo: requires energy > 1 (ln E must be positive)");
    const double L = std::log(energy);
    const double bracket = 1.0 - 0.5 * std::log(L) / L +
                           (std::log(std::numbers::pi / std::sqrt(3.0)) + c.f2 / c.f1 - 1.0) / L;
    return std::numbers::pi * std::sqrt(1.0 / (3.0 * energy * L)) * bracket;
}

SaddleSolution solve_saddle(double energy, const ZConstants& c, double tol, int max_iterations) {
    if (!(energy >= 2.0)) throw std::domain_error("solve_saddle: requires E >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_saddle: tol must be positive");

    // bracket around the LO solution, expanded by 4 each side and clipped to (0,1).
    // S' -> -inf at both edges of (0,1) with a positive hump between two roots;
    // the physical root (S'' > 0) is the left one.
    const double guess = std::min(beta0_lo(energy), 0.5);
    double lo = guess / 4.0;
    double hi = std::min(guess * 4.0, 1.0 - 1e-9);
    auto f = [&](double b) { return entropy_d1(b, energy, c); };
    while (f(lo) > 0.0 && lo > 1e-12) lo /= 4.0;
    if (f(lo) > 0.0)
        throw SaddleError("solve_saddle: S' positive down to beta = 1e-12 at E = " +
                          std::to_string(energy));
    if (f(hi) <= 0.0) {
        // walk a log-spaced grid for the hump where S' > 0
        bool found = false;
        const double top = 1.0 - 1e-9;
        for (int i = 1; i <= 256 && !found; ++i) {
            const double b = lo * std::pow(top / lo, i / 256.0);
            if (f(b) > 0.0) {
                hi = b;
                found = true;
            }
        }
        if (!found)
            throw SaddleError(
                "solve_saddle: no sign change of S' in the maximal bracket at E = " +
                std::to_string(energy) +
                " (the truncated saddle equation has no root; E too small)");
    }

    // bisection with a safeguarded Newton refinement
    double b = 0.5 * (lo + hi);
    int iter = 0;
    double resid = HUGE_VAL;
    for (; iter < max_iterations; ++iter) {
        const double fb = f(b);
        resid = std::abs(fb) / energy;
        if (resid < tol) break;
        if (fb < 0.0)
            lo = b;
        else
            hi = b;
        const double slope = entropy_d2(b, energy, c);
        double next = (slope != 0.0) ? b - fb / slope : b;
        const double lo_ = std::min(lo, hi), hi_ = std::max(lo, hi);
        if (!(next > lo_) || !(next < hi_)) next = 0.5 * (lo + hi);
        b = next;
    }
    if (resid >= tol)
        throw SaddleError("solve_saddle: no convergence after " + std::to_string(iter) +
                          " iterations at E = " + std::to_string(energy) + " (residual " +
                          std::to_string(resid) + ")");

    SaddleSolution sol;
    sol.energy = energy;
    sol.beta0 = b;
    sol.entropy = entropy(b, energy, c);
    sol.s2 = entropy_d2(b, energy, c);
    sol.iterations = iter;
    sol.residual = resid;
    return sol;
}

double rho_saddle(const SaddleSolution& solution) {
    if (!(solution.s2 > 0.0))
        throw std::domain_error("rho_saddle: S''(beta0) must be positive (got " +
                                std::to_string(solution.s2) + ")");
    return solution.entropy - 0.5 * std::log(2.0 * std::numbers::pi * solution.s2);
}

double log_p_formula(double n, Variant variant, const ZConstants& c) {
    if (!(n >= 3.0)) throw std::domain_error("log_p_formula: requires n >= 3");
    const double L = std::log(n);
    const double lead = 2.0 * std::numbers::pi * std::sqrt(n / (3.0 * L));
    if (variant == Variant::lo) return lead;
    const double prefactor = -std::log(2.0 * std::pow(3.0 * L, 0.25) * std::pow(n, 0.75));
    const double LL = std::log(L);
    if (variant == Variant::vaughan) return prefactor + lead * (1.0 + LL / L);
    const double bracket =
        1.0 - 0.5 * LL / L + (c.f2 / c.f1 + std::log(std::numbers::pi / std::sqrt(3.0))) / L;
    return prefactor + lead * bracket;
}

} // namespace primepart
