#pragma once

#include <complex>
#include <functional>

namespace polylip {

using Cplx = std::complex<double>;

/// Adaptive composite Gauss-Legendre (16 nodes per panel, bisection on
/// disagreement) for complex-valued integrands of a real parameter.
Cplx integrate(const std::function<Cplx(double)>& f, double a, double b, double abs_tol);

/// Line integral of f along the straight segment z0 -> z1.
Cplx integrate_segment(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1, double abs_tol);

/// Counterclockwise integral of f over the rectangle with corners
/// (x0, -h), (x1, -h), (x1, h), (x0, h).
Cplx integrate_rectangle(const std::function<Cplx(Cplx)>& f, double x0, double x1, double h,
                         double abs_tol);

}  // namespace polylip
