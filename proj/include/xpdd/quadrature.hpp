#ifndef XPDD_QUADRATURE_HPP
#define XPDD_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace xpdd::quadrature {

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b].
// Bisects until the local K-G error estimate meets the tolerance split
// across subintervals. Throws Error if the recursion depth limit is hit.
double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double rel_tol = 1e-10,
                              double abs_tol = 0.0);

// Composite Simpson with m intervals (rounded up to even).
double composite_simpson(const std::function<double(double)>& f, double a,
                         double b, int m);

// Trapezoid rule on tabulated samples at arbitrary nodes.
double trapezoid(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace xpdd::quadrature

#endif
