#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "polylip/delta.hpp"
#include "polylip/quadrature.hpp"

using namespace polylip;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

std::mt19937 rng(411);

Cplx random_disk_point(double radius) {
    std::uniform_real_distribution<double> r(0.05, radius);
    std::uniform_real_distribution<double> th(0.0, 2.0 * M_PI);
    const double rad = r(rng), a = th(rng);
    return Cplx(rad * std::cos(a), rad * std::sin(a));
}

constexpr double kPi = M_PI;

}  // namespace

TEST_CASE("delta_eval closed values") {
    // geometric: delta_0(1/2) = 1
    auto r0 = delta_eval(0, Cplx(0.5, 0.0));
    CHECK(r0.method == EvalMethod::rational_closed_form);
    CHECK(std::abs(r0.value - Cplx(1.0, 0.0)) < 1e-15);

    // delta_{-1}(1/2) = log 2
    auto rm1 = delta_eval(-1, Cplx(0.5, 0.0));
    CHECK(rm1.method == EvalMethod::series);
    CHECK(std::abs(rm1.value - Cplx(std::log(2.0), 0.0)) < 1e-14);

    // delta_1(1/2) = q/(1-q)^2 = 2
    auto r1 = delta_eval(1, Cplx(0.5, 0.0));
    CHECK(std::abs(r1.value - Cplx(2.0, 0.0)) < 1e-15);

    // delta_2 = q(1+q)/(1-q)^3 spot check against the series
    const Cplx q(0.3, 0.2);
    const Cplx closed = q * (Cplx(1.0, 0.0) + q) / cplx_pow_int(Cplx(1.0, 0.0) - q, 3);
    CHECK(std::abs(delta_eval(2, q).value - closed) < 1e-14);

    // boundary point for n <= -2: zeta(2)
    auto zeta2 = delta_eval(-2, Cplx(1.0, 0.0));
    CHECK(zeta2.method == EvalMethod::series);
    CHECK(std::abs(zeta2.value - Cplx(kPi * kPi / 6.0, 0.0)) <= zeta2.tail_bound + 1e-12);
    CHECK(std::abs(zeta2.value - Cplx(kPi * kPi / 6.0, 0.0)) < 1e-5);
}

TEST_CASE("delta_eval domain errors") {
    CHECK_THROWS_AS(delta_eval(1, Cplx(1.0, 0.0)), std::domain_error);       // pole
    CHECK_THROWS_AS(delta_eval(-1, Cplx(1.0, 0.0)), std::domain_error);      // divergent circle
    CHECK_THROWS_AS(delta_eval(-1, Cplx(0.0, 1.0)), std::domain_error);      // |q|=1, n=-1
    CHECK_THROWS_AS(delta_eval(-2, Cplx(2.0, 0.0)), std::domain_error);      // continuation on cut
    CHECK_THROWS_AS(delta_eval(-2, Cplx(std::nan(""), 0.0)), std::domain_error);
    // |q|=1 fine for n <= -2 off q=1
    CHECK_NOTHROW(delta_eval(-2, Cplx(0.0, 1.0)));
}

TEST_CASE("continuation branch matches the independent reference ladder") {
    // |q| > 1 off the cut: delta_eval continues through the inversion
    // equation; delta_reference continues through iterated integrals. The two
    // must agree, which exercises the inversion equation itself.
    for (Cplx q : {Cplx(-2.0, 0.0), Cplx(1.5, 1.5), Cplx(-0.7, -1.9), Cplx(0.4, 2.2)}) {
        for (int n : {-1, -2, -3}) {
            auto cont = delta_eval(n, q);
            CHECK(cont.method == EvalMethod::inversion_continuation);
            CHECK(std::abs(cont.value - delta_reference(n, q)) < 1e-10);
        }
    }
}

TEST_CASE("inversion defect examples") {
    CHECK(inversion_defect(2, Cplx(0.0, 2.0)) < 1e-12);

    // n=-2, q=-1: both sides equal -pi^2/6
    const Cplx lhs2 = 2.0 * delta_reference(-2, Cplx(-1.0, 0.0));
    CHECK(std::abs(lhs2 - Cplx(-kPi * kPi / 6.0, 0.0)) < 1e-11);
    CHECK(std::abs(inversion_rhs(-2, Cplx(-1.0, 0.0)) - Cplx(-kPi * kPi / 6.0, 0.0)) < 1e-14);
    CHECK(inversion_defect(-2, Cplx(-1.0, 0.0)) < 1e-10);

    // n=0, q=-1: delta_0(-1) + delta_0(-1) = -1 = -B_0
    CHECK(std::abs(delta_eval(0, Cplx(-1.0, 0.0)).value - Cplx(-0.5, 0.0)) < 1e-15);
    CHECK(std::abs(inversion_rhs(0, Cplx(-1.0, 0.0)) - Cplx(-1.0, 0.0)) < 1e-15);
    CHECK(inversion_defect(0, Cplx(-1.0, 0.0)) < 1e-14);

    // a small grid across orders
    for (int n = -3; n <= 3; ++n)
        for (int dir = 0; dir < 4; ++dir) {
            const double th = 2.0 * kPi * (dir + 0.5) / 4.0;
            const Cplx q = 0.55 * Cplx(std::cos(th), std::sin(th));
            CHECK(inversion_defect(n, q) < 1e-10);
        }
    CHECK_THROWS_AS(inversion_defect(-1, Cplx(0.5, 0.0)), std::domain_error);  // on the cut
}

TEST_CASE("root of unity identity") {
    // n=0, k=2, q=1/3: closed forms give exactly 1/8 on both sides
    CHECK(root_of_unity_check(0, 2, Cplx(1.0 / 3.0, 0.0)) < 1e-14);
    // n=-1, k=2, q=1/2
    CHECK(root_of_unity_check(-1, 2, Cplx(0.5, 0.0)) < 1e-12);
    // n=-2, k=3, complex q
    CHECK(root_of_unity_check(-2, 3, Cplx(0.4, 0.3)) < 1e-10);
    // a few more orders and roots
    for (int n : {-3, -2, -1, 0, 1, 2})
        for (int k : {2, 3, 5}) CHECK(root_of_unity_check(n, k, Cplx(0.35, -0.4)) < 1e-10);
    CHECK_THROWS_AS(root_of_unity_check(-1, 2, Cplx(0.0, 1.0)), std::domain_error);
}

TEST_CASE("extended delta: bernoulli collapse and geometric case") {
    PhiVector bern_phi;
    bern_phi.values = {Q(1), Q(0), Q(0), Q(0)};
    bern_phi.parity = ParityClass::even_vanishing;

    for (int n : {-1, -2, -3}) {
        ExtendedDeltaSpec spec{bern_phi, n, SignCase::p_case};
        for (Cplx q : {Cplx(0.5, 0.0), Cplx(-0.3, 0.6), Cplx(0.1, -0.8)}) {
            const Cplx a = extended_delta_eval(spec, q).value;
            const Cplx b = delta_eval(n, q).value;
            CHECK(std::abs(a - b) < 1e-12);
        }
    }

    ExtendedDeltaSpec spec0{bern_phi, 0, SignCase::p_case};
    CHECK(std::abs(extended_delta_eval(spec0, Cplx(0.5, 0.0)).value - Cplx(1.0, 0.0)) < 1e-15);

    // n > 0 is descriptor independent
    ExtendedDeltaSpec spec2{bern_phi, 2, SignCase::p_case};
    CHECK(std::abs(extended_delta_eval(spec2, Cplx(0.25, 0.1)).value -
                   delta_eval(2, Cplx(0.25, 0.1)).value) < 1e-15);
}

TEST_CASE("extended delta vs the Fourier-side quadrature oracle (a-seq, n=-3)") {
    // Independent oracle: a_k(n) = -(2 pi i)^{-n} c_k(-n)/(-n)! with the
    // Fourier coefficients c_k of the degree-(-n) Appell polynomial computed
    // by adaptive quadrature. This pins down the coefficient formula the
    // extended series is built on.
    auto a = AppellDescriptor::a_seq(8);
    const int m = 3;
    ExtendedDeltaSpec spec{phi_vector(a, m), -m, SignCase::p_case};
    const Cplx q(0.5, 0.0);
    const Cplx got = extended_delta_eval(spec, q).value;

    Polynomial am = appell_poly(a, m);
    Cplx oracle(0.0, 0.0);
    const Cplx scale = -cplx_pow_int(Cplx(0.0, 2.0 * kPi), m) / 6.0;  // -(2 pi i)^3/3!
    for (long k = 1; k <= 48; ++k) {
        const Cplx ck = integrate(
            [&](double t) {
                const double ph = -2.0 * kPi * k * t;
                return am.eval(Cplx(t, 0.0)) * Cplx(std::cos(ph), std::sin(ph));
            },
            0.0, 1.0, 1e-13);
        oracle += scale * ck * std::pow(0.5, static_cast<double>(k));
    }
    CHECK(std::abs(got - oracle) < 1e-9);
}

TEST_CASE("case polynomial equals the c0-subtracted Appell polynomial") {
    auto a = AppellDescriptor::a_seq(10);
    for (int m = 1; m <= 8; ++m) {
        auto phi = phi_vector(a, m);
        Polynomial pm = appell_poly(a, m);
        Polynomial subtracted = pm - Polynomial::constant(pm.integral_01());
        CHECK(case_polynomial(phi, m, SignCase::p_case) == subtracted);
    }
    // bernoulli: case polynomial is B_m itself for m >= 1 (c0 already 0)
    PhiVector bphi;
    bphi.values = {Q(1), Q(0), Q(0), Q(0), Q(0)};
    bphi.parity = ParityClass::even_vanishing;
    for (int m = 1; m <= 5; ++m) {
        Polynomial bm = bernoulli_poly(m);
        CHECK(case_polynomial(bphi, m, SignCase::p_case) ==
              bm - Polynomial::constant(bm.integral_01()));
    }
}

TEST_CASE("extended inversion defects") {
    // bernoulli phi reduces to the classical defect
    PhiVector bphi;
    bphi.values = {Q(1), Q(0), Q(0)};
    bphi.parity = ParityClass::even_vanishing;
    for (int n : {-3, -2, -1, 0}) {
        ExtendedDeltaSpec spec{bphi, n, SignCase::p_case};
        CHECK(extended_inversion_defect(spec, Cplx(-0.5, 0.4)) < 1e-10);
    }

    // n >= 1: RHS is 0 and Delta_n = delta_n regardless of the descriptor
    auto a = AppellDescriptor::a_seq(8);
    ExtendedDeltaSpec s1{phi_vector(a, 4), 3, SignCase::p_case};
    const Cplx q = 2.0 * Cplx(std::cos(kPi / 3.0), std::sin(kPi / 3.0));
    CHECK(extended_inversion_defect(s1, q) < 1e-12);

    // a-seq, n=-2, q=-1/2
    ExtendedDeltaSpec s2{phi_vector(a, 2), -2, SignCase::p_case};
    CHECK(extended_inversion_defect(s2, Cplx(-0.5, 0.0)) < 1e-8);

    // deeper orders on a complex point
    for (int n : {-1, -2, -3, -4}) {
        ExtendedDeltaSpec s{phi_vector(a, -n), n, SignCase::p_case};
        CHECK(extended_inversion_defect(s, Cplx(-0.4, 0.55)) < 1e-9);
    }

    // synthetic even-jump vector: the Q-case inversion closes with sign
    // (-1)^{n+1}
    PhiVector even_phi;
    even_phi.values = {Q(0), Q(1), Q(0), Q(1, 2)};
    even_phi.parity = ParityClass::odd_vanishing;
    for (int n : {-2, -3, -4}) {
        ExtendedDeltaSpec s{even_phi, n, SignCase::q_case};
        CHECK(extended_inversion_defect(s, Cplx(-0.6, 0.3)) < 1e-10);
    }
}

TEST_CASE("q d/dq ladder against centered finite differences") {
    // q d/dq delta_n = delta_{n+1}; differentiate in u with q = e^u
    const double h = 1e-5;
    for (int n = -3; n <= 2; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const Cplx q = random_disk_point(0.8);
            const Cplx qp = q * std::exp(Cplx(h, 0.0));
            const Cplx qm = q * std::exp(Cplx(-h, 0.0));
            const Cplx fd = (delta_eval(n, qp).value - delta_eval(n, qm).value) / (2.0 * h);
            const Cplx want = delta_eval(n + 1, q).value;
            CHECK(std::abs(fd - want) / std::max(1.0, std::abs(want)) < 1e-6);
        }
    }
}

TEST_CASE("integral representation of delta_{-2}") {
    // -int_0^q log(1-t)/t dt along the straight path, |q| <= 0.9, cut plane
    for (Cplx q : {Cplx(0.5, 0.0), Cplx(-0.9, 0.0), Cplx(0.3, 0.6), Cplx(-0.2, -0.85)}) {
        const Cplx byint = -integrate_segment(
            [&](Cplx t) {
                if (std::abs(t) < 1e-8) return Cplx(-1.0, 0.0) - t / 2.0;
                return std::log(Cplx(1.0, 0.0) - t) / t;
            },
            Cplx(0.0, 0.0), q, 1e-12);
        CHECK(std::abs(byint - delta_eval(-2, q).value) < 1e-9);
    }
}

TEST_CASE("conjugation symmetry") {
    for (Cplx q : {Cplx(0.4, 0.3), Cplx(-0.6, 0.2), Cplx(1.4, 1.1), Cplx(-2.0, -0.7)}) {
        for (int n : {-3, -2, -1, 0, 2}) {
            if (std::abs(q) > 1.0 && n >= 0) continue;
            const Cplx a = delta_eval(n, std::conj(q)).value;
            const Cplx b = std::conj(delta_eval(n, q).value);
            CHECK(std::abs(a - b) < 1e-12 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("tail bound audit: reported error within the stated bound") {
    // |reported value - higher-precision value| <= tail_bound across a random
    // sample of series evaluations (plus rounding slack).
    int audited = 0;
    while (audited < 100) {
        const int n = -1 - static_cast<int>(rng() % 3);
        const Cplx q = random_disk_point(0.97);
        auto res = delta_eval(n, q);
        const Cplx ref = delta_reference(n, q);
        CHECK(std::abs(res.value - ref) <= res.tail_bound + 1e-13);
        ++audited;
    }
}

TEST_CASE("log branch with cut on the positive axis") {
    CHECK(std::abs(log_positive_cut(Cplx(-1.0, 0.0)) - Cplx(0.0, kPi)) < 1e-15);
    CHECK(std::abs(log_positive_cut(Cplx(0.0, 1.0)) - Cplx(0.0, kPi / 2.0)) < 1e-15);
    CHECK(std::abs(log_positive_cut(Cplx(0.0, -1.0)) - Cplx(0.0, 3.0 * kPi / 2.0)) < 1e-15);
    CHECK_THROWS_AS(log_positive_cut(Cplx(2.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(log_positive_cut(Cplx(0.0, 0.0)), std::domain_error);
}

TEST_CASE("eval result method tags") {
    CHECK(delta_eval(3, Cplx(0.2, 0.1)).method == EvalMethod::rational_closed_form);
    CHECK(delta_eval(-2, Cplx(0.2, 0.1)).method == EvalMethod::series);
    CHECK(delta_eval(-2, Cplx(1.2, 1.4)).method == EvalMethod::inversion_continuation);
    CHECK(delta_eval(-2, Cplx(0.2, 0.1)).tail_bound < 1e-14);
    CHECK(delta_eval(3, Cplx(0.2, 0.1)).tail_bound == 0.0);
}
