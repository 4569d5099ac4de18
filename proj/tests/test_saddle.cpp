#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "primepart/saddle.hpp"

using namespace primepart;

namespace {

const ZConstants C = ZConstants::converged();

// exact analytic derivatives of the truncated entropy, derived independently;
// the production entropy_d1/d2 drop the 1/ln^3 (and 1/ln^4) pieces
double exact_d1(double b, double E) {
    const double u = std::log(b);
    return E + C.f1 * (u + 1.0) / (b * b * u * u) - C.f2 * (u + 2.0) / (b * b * u * u * u);
}

double exact_d2(double b, double E) {
    (void)E;
    const double u = std::log(b);
    const double b3 = b * b * b;
    return -C.f1 * (2.0 * u * u + 3.0 * u + 2.0) / (b3 * u * u * u) +
           C.f2 * ((2.0 * u + 3.0) / (b3 * u * u * u) + (3.0 * u + 6.0) / (b3 * u * u * u * u));
}

// plain bisection on entropy_d1, independent of the production solver's
// Newton refinement
double bisect_root(double E) {
    double lo = beta0_lo(E) / 8.0;
    double hi = std::min(beta0_lo(E) * 2.0, 0.9);
    while (entropy_d1(hi, E, C) < 0.0) hi *= 0.9;
    REQUIRE(entropy_d1(lo, E, C) < 0.0);
    REQUIRE(entropy_d1(hi, E, C) > 0.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (entropy_d1(mid, E, C) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("entropy closed form") {
    const double e = std::numbers::e;
    // ln beta = -1
    CHECK(entropy(1.0 / e, 1.0, C) ==
          doctest::Approx(1.0 / e + C.f1 * e + C.f2 * e).epsilon(1e-14));
    // frozen arithmetic regression (converged f2)
    CHECK(entropy(0.01, 1000.0, C) == doctest::Approx(54.6171875186348535).epsilon(1e-9));
    CHECK_THROWS_AS(entropy(1.0, 10.0, C), std::domain_error);
    CHECK_THROWS_AS(entropy(0.5, 0.0, C), std::domain_error);
    CHECK_THROWS_AS(entropy(0.0, 10.0, C), std::domain_error);
}

TEST_CASE("entropy derivatives are the printed truncations") {
    const double e = std::numbers::e;
    // ln beta = -1, E = 0
    CHECK(entropy_d1(1.0 / e, 0.0, C) ==
          doctest::Approx(-C.f1 * e * e + (C.f1 - C.f2) * e * e).epsilon(1e-13));

    SUBCASE("finite differences match the exact derivatives of S") {
        for (double b : {0.2, 0.05, 0.01, 0.002}) {
            for (double E : {10.0, 1e4, 1e6}) {
                const double h1 = 1e-6 * b;
                const double fd1 =
                    (entropy(b + h1, E, C) - entropy(b - h1, E, C)) / (2.0 * h1);
                CHECK(fd1 == doctest::Approx(exact_d1(b, E)).epsilon(1e-4));
                const double h2 = 1e-4 * b;
                const double fd2 = (entropy(b + h2, E, C) - 2.0 * entropy(b, E, C) +
                                    entropy(b - h2, E, C)) /
                                   (h2 * h2);
                CHECK(fd2 == doctest::Approx(exact_d2(b, E)).epsilon(1e-5));
            }
        }
    }

    SUBCASE("the dropped term is exactly the next order") {
        for (double b : {0.2, 0.05, 0.01}) {
            const double u = std::log(b);
            const double drop1 = -2.0 * C.f2 / (b * b * u * u * u);  // positive, u < 0
            CHECK(entropy_d1(b, 123.0, C) + drop1 ==
                  doctest::Approx(exact_d1(b, 123.0)).epsilon(1e-12));
            // truncation gap shrinks like 1/ln(beta) relative to the f-terms
            const double rel = std::abs(drop1) /
                               std::abs(entropy_d1(b, 0.0, C) == 0.0 ? 1.0
                                                                     : entropy_d1(b, 0.0, C));
            CHECK(rel < 2.5 / std::abs(u));
        }
    }
}

TEST_CASE("saddle solver") {
    SUBCASE("matches plain bisection") {
        for (double E : {1e2, 1e3, 1e4, 1e6, 1e8}) {
            const auto sol = solve_saddle(E, C);
            CHECK(sol.beta0 == doctest::Approx(bisect_root(E)).epsilon(1e-10));
            CHECK(sol.residual < 1e-12);
            CHECK(sol.beta0 > 0.0);
            CHECK(sol.beta0 < 1.0);
            CHECK(sol.s2 > 0.0);
            CHECK(std::abs(entropy_d1(sol.beta0, E, C)) / E < 1e-12);
        }
    }

    SUBCASE("closed-form comparisons at E = 1e6") {
        const auto sol = solve_saddle(1e6, C);
        const double lo = beta0_lo(1e6);
        const double nlo = beta0_nlo(1e6, C);
        CHECK(lo == doctest::Approx(4.87984217069520773e-4).epsilon(1e-14));
        CHECK(nlo == doctest::Approx(4.67840536525264082e-4).epsilon(1e-9));
        CHECK(std::abs(sol.beta0 - lo) / sol.beta0 < 0.25);
        CHECK(std::abs(sol.beta0 - nlo) / sol.beta0 < 0.05);
    }

    SUBCASE("beta0 falls with energy") {
        double prev = 1.0;
        for (double E : {1e3, 1e4, 1e5, 1e6}) {
            const double b0 = solve_saddle(E, C).beta0;
            CHECK(b0 < prev);
            prev = b0;
        }
    }

    SUBCASE("NLO closer than LO for E >= 1e4") {
        for (double E : {1e4, 1e5, 1e6, 1e7, 1e8}) {
            const double b0 = solve_saddle(E, C).beta0;
            CHECK(std::abs(b0 - beta0_nlo(E, C)) < std::abs(b0 - beta0_lo(E)));
        }
    }

    SUBCASE("stationarity: the saddle minimises S along real beta") {
        const auto sol = solve_saddle(1e5, C);
        const double s0 = entropy(sol.beta0, 1e5, C);
        for (double d : {1e-3, 1e-2}) {
            CHECK(entropy(sol.beta0 * (1.0 + d), 1e5, C) > s0);
            CHECK(entropy(sol.beta0 * (1.0 - d), 1e5, C) > s0);
        }
    }

    SUBCASE("unsolvable and invalid energies") {
        // the truncated saddle equation loses its root below E of about 11.6
        CHECK_THROWS_AS(solve_saddle(2.0, C), SaddleError);
        CHECK_THROWS_AS(solve_saddle(10.0, C), SaddleError);
        CHECK_THROWS_AS(solve_saddle(1.5, C), std::domain_error);
        CHECK_NOTHROW(solve_saddle(12.0, C));
    }

    SUBCASE("s2 positive over the solvable range") {
        for (double E : {12.0, 20.0, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8})
            CHECK(solve_saddle(E, C).s2 > 0.0);
    }
}

TEST_CASE("closed-form beta0 domains") {
    const double e = std::numbers::e;
    CHECK(beta0_lo(e) == doctest::Approx(std::numbers::pi / std::sqrt(3.0 * e)).epsilon(1e-14));
    CHECK_THROWS_AS(beta0_lo(1.0), std::domain_error);
    CHECK_THROWS_AS(beta0_nlo(0.5, C), std::domain_error);
    // frozen NLO bracket at 1e6: 1 - lnln/2ln + (ln(pi/sqrt3) + f2/f1 - 1)/ln
    const double L = std::log(1e6);
    const double bracket = beta0_nlo(1e6, C) / (std::numbers::pi * std::sqrt(1.0 / (3e6 * L)));
    CHECK(bracket == doctest::Approx(0.95872063).epsilon(1e-7));
    // NLO/LO ratio approaches 1 from below as E grows
    const double r6 = beta0_nlo(1e6, C) / beta0_lo(1e6);
    const double r12 = beta0_nlo(1e12, C) / beta0_lo(1e12);
    CHECK(std::abs(r12 - 1.0) < 0.1);
    CHECK(std::abs(r12 - 1.0) < std::abs(r6 - 1.0));
}

TEST_CASE("log density from the saddle") {
    SUBCASE("agrees with the closed form, tighter as E grows") {
        double prev_gap = HUGE_VAL;
        for (double E : {1e4, 1e5, 1e6, 1e7}) {
            const double lr = rho_saddle(solve_saddle(E, C));
            const double lm = log_p_formula(E, Variant::main, C);
            const double gap = std::abs(lr - lm) / std::abs(lm);
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        CHECK(std::abs(rho_saddle(solve_saddle(1e4, C)) - log_p_formula(1e4, Variant::main, C)) /
                  log_p_formula(1e4, Variant::main, C) <
              0.025);
        CHECK(std::abs(rho_saddle(solve_saddle(1e6, C)) - log_p_formula(1e6, Variant::main, C)) /
                  log_p_formula(1e6, Variant::main, C) <
              0.02);
    }

    SUBCASE("rejects a non-saddle") {
        SaddleSolution bad{};
        bad.s2 = -1.0;
        CHECK_THROWS_AS(rho_saddle(bad), std::domain_error);
    }
}

TEST_CASE("closed-form ln P variants") {
    // frozen regressions at n = 1e6 (converged f2)
    CHECK(log_p_formula(1e6, Variant::lo, C) ==
          doctest::Approx(975.968434139041547).epsilon(1e-13));
    CHECK(log_p_formula(1e6, Variant::vaughan, C) ==
          doctest::Approx(1149.47624230270096).epsilon(1e-9));
    CHECK(log_p_formula(1e6, Variant::main, C) ==
          doctest::Approx(994.338142810432816).epsilon(1e-9));
    // ordering at n = 1e6
    CHECK(log_p_formula(1e6, Variant::lo, C) < log_p_formula(1e6, Variant::main, C));
    CHECK(log_p_formula(1e6, Variant::main, C) < log_p_formula(1e6, Variant::vaughan, C));
    CHECK_THROWS_AS(log_p_formula(2.0, Variant::lo, C), std::domain_error);

    // f2 propagates from the constants object into the main variant
    const auto paper = ZConstants::paper();
    const double dmain = log_p_formula(1e6, Variant::main, paper) -
                         log_p_formula(1e6, Variant::main, C);
    const double dlead = 2.0 * std::numbers::pi * std::sqrt(1e6 / (3.0 * std::log(1e6)));
    CHECK(dmain ==
          doctest::Approx((paper.f2 - C.f2) / C.f1 / std::log(1e6) * dlead).epsilon(1e-6));
    CHECK(log_p_formula(1e6, Variant::lo, paper) == log_p_formula(1e6, Variant::lo, C));
}
