#pragma once

#include <vector>

#include "polylip/appell.hpp"
#include "polylip/multipoly.hpp"
#include "polylip/report.hpp"
#include "polylip/series.hpp"

namespace polylip {

/// Lazard-universal data over Q[c_1..c_{N-1}]: the formal group logarithm
/// F(s) = s + c_1 s^2/2 + c_2 s^3/3 + ... and its compositional inverse G
/// (the exponential), both exact to order N.
struct FormalGroupData {
    int order;
    PolySeries F;
    PolySeries G;
};

/// 2 <= N <= 16 (cost guard). F(G(t)) = t and G(F(s)) = s hold exactly.
FormalGroupData build_formal_group(int N);

/// The two-variable law Phi(s1,s2) = G(F(s1)+F(s2)) to total degree N;
/// law[i][j] is the coefficient of s1^i s2^j, i + j <= N.
std::vector<std::vector<MultiPoly>> formal_group_law(const FormalGroupData& fg);

struct UniversalBernoulli {
    int order;
    std::vector<MultiPoly> numbers;  // B^_0..B^_N over Q[c_1..c_N]
};

/// n! [t^n] of t/G(t), exact; N <= 20 (cost guard; the congruence checks stay
/// within 14, the classical-specialization check goes to 20).
UniversalBernoulli universal_bernoulli(int N);

/// Universal Bernoulli polynomials from (t/G) e^{xt}: polys[n][d] is the
/// MultiPoly coefficient of x^d in B^G_n(x).
std::vector<std::vector<MultiPoly>> universal_bernoulli_polys(int N);

/// c_i = (-1)^i, the specialization under which G becomes e^t - 1 and the
/// universal numbers collapse to the classical Bernoulli numbers.
std::vector<Rational> classical_specialization(std::size_t arity);

/// c_i making G(t) = (e^t - 1) g(t) for a descriptor with rational g; under
/// these the universal numbers specialize to the descriptor's Appell numbers.
std::vector<Rational> descriptor_specialization(const AppellDescriptor& d, int N);

/// Universal von Staudt congruence: for n even checks that
/// B^_n + sum_{(p-1)|n} c_{p-1}^{n/(p-1)}/p has integer coefficients; for odd
/// n > 1 checks B^_n - (c_1^n + c_1^{n-3} c_3)/2 does. 2 <= n <= 14.
CongruenceVerdict von_staudt_check(int n);

/// Universal Kummer congruence: B^_{n+p-1}/(n+p-1) - (B^_n/n) c_{p-1} has all
/// coefficients of p-adic valuation >= 1. Inapplicable (not failed) when
/// n = 0 or 1 mod p-1.
CongruenceVerdict kummer_check(int n, int p);

/// Classical von Staudt-Clausen: B_n + sum_{(p-1)|n} 1/p is an integer for
/// even n (the classical divisibility condition (p-1) | n).
CongruenceVerdict classical_cvs_check(int n);

/// Remainder of the variant condition p | n instead of (p-1) | n;
/// non-integral already at n = 4, which is why the classical condition is the
/// one implemented.
Rational cvs_p_divides_n_remainder(int n);

bool is_prime(int p);

}  // namespace polylip
