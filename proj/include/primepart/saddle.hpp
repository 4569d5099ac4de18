#ifndef PRIMEPART_SADDLE_HPP
#define PRIMEPART_SADDLE_HPP

#include "primepart/zfunc.hpp"

namespace primepart {

struct SaddleSolution {
    double energy;
    double beta0;      // in (0,1)
    double entropy;    // S(beta0)
    double s2;         // S''(beta0), positive at a true saddle
    int iterations;
    double residual;   // |S'(beta0)| / E
};

struct SaddleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// S(beta) = beta E - f1/(beta ln beta) + f2/(beta ln^2 beta), 0 < beta < 1.
double entropy(double beta, double energy, const ZConstants& constants);

/// The printed truncated derivatives of S (terms beyond 1/ln^2 dropped):
///   S'  = E + f1/(b^2 ln b) + (f1-f2)/(b^2 ln^2 b)
///   S'' = -2 f1/(b^3 ln b) - (3 f1 - 2 f2)/(b^3 ln^2 b)
double entropy_d1(double beta, double energy, const ZConstants& constants);
double entropy_d2(double beta, double energy, const ZConstants& constants);

/// Solves S'(beta0) = 0 by bracketed bisection with safeguarded Newton steps.
/// The bracket starts from the LO closed form expanded by 4 each side. Throws
/// SaddleError when no sign change exists in the maximal bracket (E too small;
/// the truncated equation has no root below E of about 11.6) or on iteration cap.
SaddleSolution solve_saddle(double energy, const ZConstants& constants, double tol = 1e-12,
                            int max_iterations = 200);

/// Leading-order closed form 1/sqrt((3/pi^2) E ln E); requires E > 1.
double beta0_lo(double energy);

/// NLO closed form
/// pi sqrt(1/(3 E ln E)) [1 - (1/2) lnln E/ln E + (ln(pi/sqrt 3) + f2/f1 - 1)/ln E].
double beta0_nlo(double energy, const ZConstants& constants);

/// ln rho(E) = S(beta0) - (1/2) ln(2 pi S''(beta0)); cumulants dropped.
double rho_saddle(const SaddleSolution& solution);

enum class Variant { lo, vaughan, main };

/// ln of the closed-form asymptotic count, exactly as printed:
///   lo:      2 pi sqrt(n/(3 ln n))
///   vaughan: -ln(2 (3 ln n)^{1/4} n^{3/4}) + lo * [1 + lnln n/ln n]
///   main:    -ln(2 (3 ln n)^{1/4} n^{3/4})
///            + lo * [1 - (1/2) lnln n/ln n + (f2/f1 + ln(pi/sqrt 3))/ln n]
double log_p_formula(double n, Variant variant, const ZConstants& constants);

} // namespace primepart

#endif
