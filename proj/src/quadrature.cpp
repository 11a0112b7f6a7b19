#include "polylip/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace polylip {
namespace {

struct GaussRule {
    std::array<double, 16> x;  // nodes on [-1,1]
    std::array<double, 16> w;
};

// Nodes are roots of P_16, found by Newton from the Chebyshev initial guess.
GaussRule make_rule16() {
    GaussRule r{};
    const int n = 16;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& rule16() {
    static const GaussRule r = make_rule16();
    return r;
}

Cplx gauss_panel(const std::function<Cplx(double)>& f, double a, double b) {
    const auto& r = rule16();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    Cplx acc(0.0, 0.0);
    for (int i = 0; i < 16; ++i) acc += r.w[i] * f(mid + half * r.x[i]);
    return acc * half;
}

Cplx adaptive(const std::function<Cplx(double)>& f, double a, double b, Cplx whole, double tol,
              int depth) {
    const double mid = 0.5 * (a + b);
    const Cplx left = gauss_panel(f, a, mid);
    const Cplx right = gauss_panel(f, mid, b);
    const Cplx refined = left + right;
    if (std::abs(refined - whole) <= tol || depth >= 24) return refined;
    return adaptive(f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

Cplx integrate(const std::function<Cplx(double)>& f, double a, double b, double abs_tol) {
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
    if (a == b) return Cplx(0.0, 0.0);
    return adaptive(f, a, b, gauss_panel(f, a, b), abs_tol, 0);
}

Cplx integrate_segment(const std::function<Cplx(Cplx)>& f, Cplx z0, Cplx z1, double abs_tol) {
    const Cplx dz = z1 - z0;
    return dz * integrate([&](double t) { return f(z0 + t * dz); }, 0.0, 1.0, abs_tol);
}

Cplx integrate_rectangle(const std::function<Cplx(Cplx)>& f, double x0, double x1, double h,
                         double abs_tol) {
    const double edge_tol = 0.25 * abs_tol;
    Cplx acc(0.0, 0.0);
    acc += integrate_segment(f, {x0, -h}, {x1, -h}, edge_tol);
    acc += integrate_segment(f, {x1, -h}, {x1, h}, edge_tol);
    acc += integrate_segment(f, {x1, h}, {x0, h}, edge_tol);
    acc += integrate_segment(f, {x0, h}, {x0, -h}, edge_tol);
    return acc;
}

}  // namespace polylip
