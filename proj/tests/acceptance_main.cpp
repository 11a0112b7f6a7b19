// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "polylip/appell.hpp"
#include "polylip/delta.hpp"
#include "polylip/formal_group.hpp"
#include "polylip/lipschitz.hpp"
#include "polylip/suites.hpp"

using namespace polylip;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int idx, const std::string& name, bool ok, double seconds,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

Rational Q(long n, long d = 1) { return Rational(n, d); }

// ---------------------------------------------------------------------------
// 1. Exact reproduction of the frozen low-order tables (zero tolerance, < 1 s)
bool criterion_tables(std::string& detail) {
    bool ok = true;

    const std::vector<Polynomial> want_r = {
        Polynomial({Q(1)}),
        Polynomial({Q(-1, 2), Q(1)}),
        Polynomial({Q(1, 12), Q(-1), Q(1)}),
        Polynomial({Q(1, 12), Q(1, 3), Q(-3, 2), Q(1)}),
        Polynomial({Q(-13, 360), Q(1, 4), Q(3, 4), Q(-2), Q(1)}),
        Polynomial({Q(-7, 120), Q(-13, 60), Q(1, 2), Q(4, 3), Q(-5, 2), Q(1)})};
    for (int n = 1; n <= 6; ++n)
        ok &= r_poly(bernoulli_poly(n)) == want_r[(std::size_t)n - 1];

    auto aseq = AppellDescriptor::a_seq(6);
    auto an = appell_numbers(aseq, 4);
    ok &= an[0] == Q(1) && an[1] == Q(-1, 2) && an[2] == Q(1, 2) && an[3] == Q(-1, 2) &&
          an[4] == Q(23, 30);

    auto bseq = AppellDescriptor::b_seq(6);
    auto bn = appell_numbers(bseq, 4);
    ok &= bn[0] == Q(1) && bn[1] == Q(-1, 2) && bn[2] == Q(7, 6) && bn[3] == Q(-3, 2) &&
          bn[4] == Q(179, 30);

    auto fg = build_formal_group(3);
    const std::size_t m = 2;
    ok &= fg.G.coeff(1) == MultiPoly::constant(m, Q(1));
    ok &= fg.G.coeff(2) == MultiPoly::variable(m, 1).scaled(Q(-1, 2));
    ok &= fg.G.coeff(3) == MultiPoly::variable(m, 1).pow(2).scaled(Q(1, 2)) -
                               MultiPoly::variable(m, 2).scaled(Q(1, 3));

    detail = "R_1..R_6, a_0..a_4, b_0..b_4, G through t^3, all exact";
    return ok;
}

// ---------------------------------------------------------------------------
// 2. Inversion identity, defect < 1e-10, 100-point grid, n in {-3..3}, < 10 s
bool criterion_inversion(std::string& detail) {
    InversionConfig cfg;  // radii 0.3..0.7 x 10, rays 10, n -3..3
    cfg.tol = 1e-10;
    auto res = run_inversion_suite(cfg);
    double worst = 0.0;
    for (const auto& r : res.reports) worst = std::max(worst, r.abs_defect);
    detail = "worst defect " + fmt_double(worst) + " over " + std::to_string(res.reports.size()) +
             " grid points, tol 1e-10";
    return res.all_pass;
}

// ---------------------------------------------------------------------------
// 3. Classical Lipschitz formula, rel defect < 1e-8; k=2 against the
//    pi^2/sin^2(pi z) oracle to 1e-10
bool criterion_classical(std::string& detail) {
    ClassicalLipschitzConfig cfg;  // k 2..6, z {i, 1/2+i, 0.3+0.7i}
    cfg.rel_tol = 1e-8;
    auto res = run_classical_lipschitz_suite(cfg);
    bool ok = res.all_pass;
    double worst_oracle = 0.0;
    for (Cplx z : cfg.zs) {
        auto rep = classical_lipschitz_check(2, z, 0, 1e-10);
        const Cplx s = std::sin(M_PI * z);
        worst_oracle = std::max(worst_oracle, std::abs(rep.lhs - M_PI * M_PI / (s * s)));
    }
    ok &= worst_oracle < 1e-10;
    detail = "k=2..6 rel tol 1e-8; k=2 closed-form gap " + fmt_double(worst_oracle);
    return ok;
}

// ---------------------------------------------------------------------------
// 4. Generalized Lipschitz formula: K = 1e5 defect < 1e-3 and rate >= 1.8 on
//    doubling (or defect at 2K below the double-precision floor 1e-12)
bool criterion_generalized(std::string& detail) {
    LipschitzConfig cfg;  // bernoulli + a-seq, n -2..2, 3 taus + conjugates
    cfg.K = 100000;
    cfg.tol = 1e-3;
    cfg.min_ratio = 1.8;
    cfg.rate_floor = 1e-12;
    auto res = run_lipschitz_suite(cfg);
    double worst = 0.0;
    int rate_ok = 0;
    for (const auto& r : res.reports) worst = std::max(worst, r.abs_defect);
    for (const auto& rc : res.rate_checks) rate_ok += rc.pass ? 1 : 0;
    detail = "worst defect " + fmt_double(worst) + " at K=1e5; rate checks " +
             std::to_string(rate_ok) + "/" + std::to_string(res.rate_checks.size());
    return res.all_pass;
}

// ---------------------------------------------------------------------------
// 5. Hyperfunction pairing: moments to 1e-9, contour independence to 1e-10
bool criterion_pairing(std::string& detail) {
    PairingConfig cfg;  // n <= 4, m <= 4, margins 0.2/0.35
    cfg.tol = 1e-9;
    cfg.independence_tol = 1e-10;
    auto res = run_pairing_suite(cfg);
    double worst = 0.0;
    for (const auto& r : res.reports) worst = std::max(worst, r.abs_defect);
    detail = "worst moment gap " + fmt_double(worst) + "; independence to 1e-10";
    return res.all_pass;
}

// ---------------------------------------------------------------------------
// 6. Boundary-value equation, Richardson-extrapolated defect < 1e-6
bool criterion_boundary(std::string& detail) {
    BoundaryConfig cfg;  // n {-1,-2,-3}, x {1/4,1/2,3/4}, eps 2e-3
    cfg.tol = 1e-6;
    auto res = run_boundary_suite(cfg);
    double worst = 0.0;
    for (const auto& r : res.reports) worst = std::max(worst, r.abs_defect);
    detail = "worst extrapolated defect " + fmt_double(worst);
    return res.all_pass;
}

// ---------------------------------------------------------------------------
// 7. Congruences: US1 even n <= 14, US2 odd 3..13, UK p in {5,7,11},
//    CvS even n <= 30, specialization through B_20; < 60 s
bool criterion_congruences(std::string& detail) {
    CongruenceConfig cfg;
    cfg.max_n = 14;
    cfg.cvs_max = 30;
    cfg.specialize_max = 20;
    auto res = run_congruence_suite(cfg);
    int held = 0, applicable = 0;
    for (const auto& v : res.verdicts)
        if (v.applicable) {
            ++applicable;
            held += v.holds ? 1 : 0;
        }
    detail = std::to_string(held) + "/" + std::to_string(applicable) +
             " applicable congruences hold; B_0..B_20 specialization exact";
    return res.all_pass;
}

// ---------------------------------------------------------------------------
// 8. Property suites
bool criterion_properties(std::string& detail) {
    bool ok = true;
    std::string why;

    // Appell derivative ladder, exact
    {
        DescriptorRegistry reg = DescriptorRegistry::with_builtins(12);
        for (const auto& label : reg.labels()) {
            const auto& d = reg.get(label);
            for (int n = 1; n <= 10; ++n)
                if (appell_poly(d, n).derivative() != appell_poly(d, n - 1).scaled(Q(n))) {
                    ok = false;
                    why += " appell-ladder";
                }
        }
    }
    // q d/dq ladder vs centered finite differences
    {
        std::mt19937 rng(2026);
        std::uniform_real_distribution<double> rad(0.05, 0.8), ang(0.0, 2.0 * M_PI);
        bool pass = true;
        const double h = 1e-5;
        for (int n = -3; n <= 2 && pass; ++n)
            for (int t = 0; t < 20 && pass; ++t) {
                const double r = rad(rng), a = ang(rng);
                const Cplx q(r * std::cos(a), r * std::sin(a));
                const Cplx fd = (delta_eval(n, q * std::exp(Cplx(h, 0.0))).value -
                                 delta_eval(n, q * std::exp(Cplx(-h, 0.0))).value) /
                                (2.0 * h);
                const Cplx want = delta_eval(n + 1, q).value;
                if (std::abs(fd - want) / std::max(1.0, std::abs(want)) >= 1e-6) pass = false;
            }
        if (!pass) {
            ok = false;
            why += " qddq-ladder";
        }
    }
    // root-of-unity identity
    {
        bool pass = true;
        for (int n : {-3, -2, -1, 0, 1, 2})
            for (int k : {2, 3, 5})
                if (root_of_unity_check(n, k, Cplx(0.35, -0.4)) >= 1e-10) pass = false;
        if (!pass) {
            ok = false;
            why += " root-of-unity";
        }
    }
    // series reversion round-trips, exact
    {
        std::mt19937 rng(77);
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 7);
        bool pass = true;
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t N = 4 + trial % 9;
            std::vector<Rational> c(N + 1, Q(0));
            c[1] = Q(1);
            for (std::size_t i = 2; i <= N; ++i) c[i] = Q(num(rng), den(rng));
            RatSeries f(c);
            auto g = series_revert(f);
            if (series_compose(f, g) != RatSeries::identity(N, Q(0))) pass = false;
            if (series_compose(g, f) != RatSeries::identity(N, Q(0))) pass = false;
        }
        for (int N : {8, 14})
            if (series_compose(build_formal_group(N).F, build_formal_group(N).G) !=
                PolySeries::identity((std::size_t)N, MultiPoly((std::size_t)N - 1)))
                pass = false;
        if (!pass) {
            ok = false;
            why += " reversion";
        }
    }
    // phi-vector double computation (the two routes are cross-asserted inside
    // phi_vector; a throw would mean disagreement)
    {
        try {
            DescriptorRegistry reg = DescriptorRegistry::with_builtins(12);
            for (const auto& label : reg.labels()) (void)phi_vector(reg.get(label), 12);
        } catch (const std::exception&) {
            ok = false;
            why += " phi-double";
        }
    }

    detail = ok ? "ladders, root-of-unity, reversion round-trips, phi double computation"
                : ("failing:" + why);
    return ok;
}

struct TimedCriterion {
    int idx;
    std::string name;
    bool (*fn)(std::string&);
    double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    const std::vector<TimedCriterion> criteria = {
        {1, "exact low-order tables (R_n, a-seq, b-seq, universal G)", criterion_tables, 1.0},
        {2, "delta inversion identity", criterion_inversion, 10.0},
        {3, "classical Lipschitz formula", criterion_classical, 0.0},
        {4, "generalized Lipschitz formula", criterion_generalized, 0.0},
        {5, "hyperfunction contour pairing", criterion_pairing, 0.0},
        {6, "boundary-value equation", criterion_boundary, 0.0},
        {7, "congruence suite (US1/US2/UK/CvS)", criterion_congruences, 60.0},
        {8, "property suites", criterion_properties, 0.0},
    };
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.budget_seconds > 0.0 && secs > c.budget_seconds) {
            ok = false;
            detail += " [over the " + fmt_double(c.budget_seconds) + "s budget]";
        }
        report(c.idx, c.name, ok, secs, detail);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures;
}
