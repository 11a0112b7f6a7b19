#pragma once

#include <complex>

#include "polylip/appell.hpp"
#include "polylip/polynomial.hpp"

namespace polylip {

using Cplx = std::complex<double>;

enum class EvalMethod { series, rational_closed_form, inversion_continuation };

std::string method_name(EvalMethod m);

struct EvalResult {
    Cplx value;
    long truncation;    // number of series terms used; 0 for closed forms
    double tail_bound;  // proven bound on the truncation error of the method
    EvalMethod method;
};

/// delta_n(q) = sum_{k>=1} k^n q^k.
/// n >= 0: rational closed form N_n(q)/(1-q)^{n+1} from an exact coefficient
/// table (pole at q = 1). n <= -1: power series inside the disk (closed disk
/// for n <= -2), outside the disk by the inversion equation with the log
/// branch cut on [0,+inf).
EvalResult delta_eval(int n, Cplx q);

/// Evaluator independent of the inversion equation, for defect tests:
/// closed forms for n >= -1, the defining series on the (closed, n <= -2)
/// disk, and the iterated integral delta_n(w) = int_0^1 delta_{n+1}(uw) du/u
/// outside it. Valid for w off [1,+inf).
Cplx delta_reference(int n, Cplx w);

/// Right side of the inversion equation for n <= 0:
/// -(2 pi i)^{-n}/(-n)! * B_{-n}(log q / (2 pi i)), arg(log) in (0, 2 pi).
Cplx inversion_rhs(int n, Cplx q);

/// |delta_n(q) + (-1)^n delta_n(1/q) - RHS|, both delta values computed
/// without the inversion-based continuation.
double inversion_defect(int n, Cplx q);

/// |delta_n(q^k) - k^{-1-n} sum_{L^k=1} delta_n(L q)|.
double root_of_unity_check(int n, int k, Cplx q);

enum class SignCase { p_case, q_case };  // odd-j / even-j boundary jumps

struct ExtendedDeltaSpec {
    PhiVector phi;
    int n;
    SignCase sign_case;
};

/// Extended delta function. n > 0 coincides with delta_n; n = 0 is the
/// geometric series; n <= -1 uses
///   a_k(n) = sum_j (phi_j / j!) (2 pi i)^{j-1} k^{n+j-1},
/// j running over the sign case's parity up to -n. The coefficient formula is
/// fixed by matching the Fourier expansion of the Appell polynomials so that
/// the Bernoulli case collapses to delta_n exactly.
EvalResult extended_delta_eval(const ExtendedDeltaSpec& spec, Cplx q);

/// m! sum_{j in J, j <= m} (phi_j/j!) B_{m+1-j}(x)/(m+1-j)! -- equals the
/// c0-subtracted Appell polynomial of degree m when the complementary-parity
/// jumps vanish.
Polynomial case_polynomial(const PhiVector& phi, int m, SignCase sc);

/// Defect of the generalized inversion equations (P-case sign (-1)^n,
/// Q-case sign (-1)^{n+1}); series/ladder evaluation on both sides.
double extended_inversion_defect(const ExtendedDeltaSpec& spec, Cplx q);

/// log with the branch cut on [0,+inf): arg in (0, 2 pi). Throws on the cut.
Cplx log_positive_cut(Cplx q);

Cplx cplx_pow_int(Cplx base, int e);

}  // namespace polylip
