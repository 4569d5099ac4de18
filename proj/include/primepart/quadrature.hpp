#ifndef PRIMEPART_QUADRATURE_HPP
#define PRIMEPART_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace primepart {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a, b]. Bisects panels until the
/// embedded error estimate satisfies abs_tol + rel_tol*|integral|.
/// Throws QuadratureError if max_depth is exhausted on some panel.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-10, int max_depth = 40);

} // namespace primepart

#endif
