#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polylip/appell.hpp"
#include "polylip/delta.hpp"
#include "polylip/polynomial.hpp"
#include "polylip/report.hpp"

namespace polylip {

enum class ReprCase { delta_derivative, log_constant, poly_log_remainder };

/// Representing function of the compact-support hyperfunction on [0,1]
/// attached to index n of a descriptor (or to a raw polynomial density):
///   n < 0 : (-1)^{-n+1} (-n)! / (pi tau^{-n+1})
///   n = 0 : -(1/(pi tau)) [1 + tau log(1 - 1/tau)]
///   n > 0 : (1/pi) [d(tau) log(1 - 1/tau) + R_d(tau)], density d = -(A_n - c0)/n!
/// log on the principal branch, so the function is holomorphic exactly off
/// [0,1] and vanishes at infinity. Far from the segment it is evaluated
/// through the moment expansion -(1/pi) sum_m mu_m tau^{-m-1}, which avoids
/// the polynomial-times-log cancellation.
class RepresentingFunction {
public:
    static RepresentingFunction for_descriptor(const AppellDescriptor& d, int n);
    static RepresentingFunction from_density(const Polynomial& density, std::string label);

    int n() const { return n_; }
    const std::string& label() const { return label_; }
    ReprCase kind() const { return kind_; }
    const Polynomial& density() const { return density_; }
    const Polynomial& remainder() const { return remainder_; }
    const PhiVector& phi() const { return phi_; }
    SignCase sign_case() const { return sign_case_; }
    bool has_descriptor() const { return has_descriptor_; }

    Cplx eval(Cplx tau) const;  // throws on tau in [0,1]

private:
    RepresentingFunction() = default;
    void finish_poly_case();

    int n_ = 0;
    std::string label_;
    ReprCase kind_ = ReprCase::log_constant;
    Polynomial density_;            // poly case
    Polynomial remainder_;          // r_poly(density)
    std::vector<double> moments_;   // mu_m = int_0^1 x^m d(x) dx
    double delta_factor_ = 0.0;     // (-1)^{-n+1} (-n)! for the delta case
    PhiVector phi_;                 // descriptor data for the q-series side
    SignCase sign_case_ = SignCase::p_case;
    bool has_descriptor_ = false;
};

Cplx phi_repr(const RepresentingFunction& rf, Cplx tau);

/// Symmetric partial sum sum_{k=-K}^{K} phi(tau + k). Symmetric truncation is
/// mandatory: for n >= 0 the two tails only converge through pairwise
/// cancellation.
Cplx translate_sum(const RepresentingFunction& rf, Cplx tau, long K);

/// Defect of the (generalized) Lipschitz formula at tau against
/// 2i (2 pi i)^{-n} Delta_{-n}(q) for Im tau > 0, or
/// 2i (2 pi i)^{-n} (-1)^{n-1} Delta_{-n}(q^{-1}) for Im tau < 0, q = e^{2 pi i tau}.
DefectReport lipschitz_defect(const RepresentingFunction& rf, Cplx tau, long K);

/// Classical Lipschitz formula for z^{-k}: symmetric lattice sum with
/// Euler-Maclaurin tail corrections against the exponential sum. K <= 0 picks
/// the truncation from the tail bound and the requested tolerance.
DefectReport classical_lipschitz_check(int k, Cplx z, long K = 0, double target_tol = 1e-10);

/// (i/2) contour integral of phi psi over the rectangle around [0,1] with the
/// given margin (>= 0.1); recovers the hyperfunction paired with psi.
Cplx contour_pairing(const RepresentingFunction& rf, const Polynomial& psi, double margin,
                     double tol = 1e-12);

/// Exact value of the pairing <u, psi> for tests and the CLI.
Rational pairing_expected(const RepresentingFunction& rf, const Polynomial& psi);

/// Boundary-value equation at q± = e^{2 pi i (x ± i eps)} for n <= -1,
/// Richardson-extrapolated over eps, eps/2, eps/4 (ratio 2, first order).
DefectReport boundary_value_check(int n, double x, double eps);

/// Pairing of the periodized hyperfunction against e^{2 pi i freq z} through
/// the two horizontal edges at height H (vertical edges cancel by
/// periodicity); trapezoid rule, nodes points per edge.
Cplx periodic_pairing(const RepresentingFunction& rf, int freq, double H, long K, int nodes);

}  // namespace polylip
