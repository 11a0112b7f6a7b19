#include "polylip/lipschitz.hpp"

#include <cmath>
#include <stdexcept>

#include "polylip/quadrature.hpp"

namespace polylip {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kMomentRadius = 3.0;  // switch to the moment expansion
constexpr int kMomentTerms = 44;

struct KahanSum {
    Cplx s{0.0, 0.0};
    Cplx c{0.0, 0.0};
    void add(Cplx x) {
        const Cplx y = x - c;
        const Cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

bool on_segment(Cplx tau) {
    return tau.imag() == 0.0 && tau.real() >= 0.0 && tau.real() <= 1.0;
}

double factorial_d(int n) { return Rational::factorial(static_cast<unsigned long>(n)).to_double(); }

}  // namespace

RepresentingFunction RepresentingFunction::for_descriptor(const AppellDescriptor& d, int n) {
    RepresentingFunction rf;
    rf.n_ = n;
    rf.label_ = d.label;
    rf.has_descriptor_ = true;
    const int phi_depth = std::max(std::max(n, -n), 1);
    rf.phi_ = phi_vector(d, std::min(phi_depth, d.max_degree));
    rf.sign_case_ = (rf.phi_.parity == ParityClass::odd_vanishing) ? SignCase::q_case
                                                                   : SignCase::p_case;
    if (n < 0) {
        rf.kind_ = ReprCase::delta_derivative;
        const double sign = ((-n + 1) % 2 == 0) ? 1.0 : -1.0;
        rf.delta_factor_ = sign * factorial_d(-n);
        return rf;
    }
    if (n == 0) {
        rf.kind_ = ReprCase::log_constant;
        return rf;
    }
    rf.kind_ = ReprCase::poly_log_remainder;
    // Density of the hyperfunction: -(A_n - c0)/n!; the c0 subtraction makes
    // the periodization mean-free, which the q-series side requires.
    Polynomial a = appell_poly(d, n);
    Polynomial p = a - Polynomial::constant(a.integral_01());
    rf.density_ = p.scaled(-Rational::factorial(static_cast<unsigned long>(n)).inverse());
    rf.finish_poly_case();
    return rf;
}

RepresentingFunction RepresentingFunction::from_density(const Polynomial& density,
                                                        std::string label) {
    RepresentingFunction rf;
    rf.n_ = std::max(density.degree(), 0) + 1;
    rf.label_ = std::move(label);
    rf.kind_ = ReprCase::poly_log_remainder;
    rf.density_ = density;
    rf.finish_poly_case();
    return rf;
}

void RepresentingFunction::finish_poly_case() {
    remainder_ = r_poly(density_);
    moments_.resize(kMomentTerms);
    for (int m = 0; m < kMomentTerms; ++m)
        moments_[static_cast<std::size_t>(m)] = density_.moment(static_cast<unsigned>(m)).to_double();
}

Cplx RepresentingFunction::eval(Cplx tau) const {
    if (on_segment(tau)) throw std::domain_error("phi_repr: tau on the segment [0,1]");
    switch (kind_) {
        case ReprCase::delta_derivative:
            return delta_factor_ / (M_PI * cplx_pow_int(tau, -n_ + 1));
        case ReprCase::log_constant: {
            if (std::abs(tau) >= kMomentRadius) {
                // 1 + tau log(1-1/tau) = -sum_{m>=1} tau^{-m}/(m+1)
                const Cplx it = Cplx(1.0, 0.0) / tau;
                Cplx acc(0.0, 0.0);
                for (int m = kMomentTerms; m >= 1; --m)
                    acc = (acc + 1.0 / (m + 1.0)) * it;
                return acc / (M_PI * tau);
            }
            const Cplx lg = std::log(Cplx(1.0, 0.0) - Cplx(1.0, 0.0) / tau);
            return -(Cplx(1.0, 0.0) + tau * lg) / (M_PI * tau);
        }
        default: {
            if (std::abs(tau) >= kMomentRadius) {
                const Cplx it = Cplx(1.0, 0.0) / tau;
                Cplx acc(0.0, 0.0);
                for (int m = kMomentTerms - 1; m >= 0; --m)
                    acc = acc * it + moments_[static_cast<std::size_t>(m)];
                return -acc * it / M_PI;
            }
            const Cplx lg = std::log(Cplx(1.0, 0.0) - Cplx(1.0, 0.0) / tau);
            return (density_.eval(tau) * lg + remainder_.eval(tau)) / M_PI;
        }
    }
}

Cplx phi_repr(const RepresentingFunction& rf, Cplx tau) { return rf.eval(tau); }

Cplx translate_sum(const RepresentingFunction& rf, Cplx tau, long K) {
    if (tau.imag() == 0.0) throw std::domain_error("translate_sum: Im tau must be nonzero");
    if (K < 1) throw std::invalid_argument("translate_sum: K must be >= 1");
    KahanSum acc;
    acc.add(rf.eval(tau));
    for (long k = 1; k <= K; ++k) {
        const double dk = static_cast<double>(k);
        acc.add(rf.eval(tau + dk));
        acc.add(rf.eval(tau - dk));
    }
    return acc.s;
}

namespace {

double translate_tail_estimate(const RepresentingFunction& rf, Cplx tau, long K) {
    const double a = std::abs(tau.real());
    const double reach = std::max(static_cast<double>(K) - a - 2.0, 2.0);
    switch (rf.kind()) {
        case ReprCase::delta_derivative: {
            const int m = -rf.n();
            return 2.0 * factorial_d(m) / (M_PI * m * std::pow(reach, m));
        }
        case ReprCase::log_constant:
            return 1.0 / (M_PI * reach);
        default: {
            const auto& d = rf.density();
            const double mu0 = std::abs(d.moment(0).to_double());
            const double mu1 = std::abs(d.moment(1).to_double());
            double maxd = 0.0;
            for (const auto& c : d.coeffs()) maxd += std::abs(c.to_double());
            return 2.0 * (mu0 * (2.0 * std::abs(tau) + 1.0) + mu1 + maxd) / (M_PI * reach);
        }
    }
}

}  // namespace

DefectReport lipschitz_defect(const RepresentingFunction& rf, Cplx tau, long K) {
    if (!rf.has_descriptor())
        throw std::invalid_argument("lipschitz_defect: needs a descriptor-backed rf");
    const int n = rf.n();
    const Cplx lhs = translate_sum(rf, tau, K);
    const Cplx q = std::exp(Cplx(0.0, kTwoPi) * tau);
    const Cplx factor = Cplx(0.0, 2.0) * cplx_pow_int(Cplx(0.0, kTwoPi), -n);
    Cplx rhs;
    if (tau.imag() > 0.0) {
        if (n >= 1) {
            ExtendedDeltaSpec spec{rf.phi(), -n, rf.sign_case()};
            rhs = factor * extended_delta_eval(spec, q).value;
        } else {
            rhs = factor * delta_eval(-n, q).value;
        }
    } else {
        const double sign = ((n - 1) % 2 == 0) ? 1.0 : -1.0;
        const Cplx qi = Cplx(1.0, 0.0) / q;
        if (n >= 1) {
            ExtendedDeltaSpec spec{rf.phi(), -n, rf.sign_case()};
            rhs = factor * sign * extended_delta_eval(spec, qi).value;
        } else {
            rhs = factor * sign * delta_eval(-n, qi).value;
        }
    }
    auto rep = DefectReport::make("lipschitz:" + rf.label(), n, tau, K, lhs, rhs,
                                  translate_tail_estimate(rf, tau, K));
    return rep;
}

DefectReport classical_lipschitz_check(int k, Cplx z, long K, double target_tol) {
    if (k < 2) throw std::invalid_argument("classical_lipschitz_check: k must be >= 2");
    if (!(z.imag() > 0.0)) throw std::domain_error("classical_lipschitz_check: Im z must be > 0");

    auto em_remainder = [&](long Kc) {
        const double a = static_cast<double>(Kc + 1) - std::abs(z);
        double num = 1.0;
        for (int j = 0; j < 5; ++j) num *= (k + j);
        return 2.0 * num * std::pow(a, -(k + 5)) / 30240.0;
    };
    if (K <= 0) {
        K = 64;
        while (K < 4'000'000 && em_remainder(K) > 0.01 * target_tol) K *= 2;
    }

    // LHS: symmetric sum plus Euler-Maclaurin corrections for both tails.
    KahanSum acc;
    for (long m = -K; m <= K; ++m) acc.add(cplx_pow_int(Cplx(static_cast<double>(m), 0.0) + z, -k));
    auto em_tail = [&](Cplx w) {
        // sum_{x=a}^{inf} (x+w)^{-k} with a = K+1
        const Cplx aw = Cplx(static_cast<double>(K + 1), 0.0) + w;
        const Cplx f = cplx_pow_int(aw, -k);
        const Cplx f1 = -static_cast<double>(k) * cplx_pow_int(aw, -k - 1);
        const Cplx f3 = -static_cast<double>(k) * (k + 1.0) * (k + 2.0) * cplx_pow_int(aw, -k - 3);
        const Cplx integral = cplx_pow_int(aw, 1 - k) / (k - 1.0);
        return integral + 0.5 * f - f1 / 12.0 + f3 / 720.0;
    };
    const double par = (k % 2 == 0) ? 1.0 : -1.0;
    const Cplx lhs = acc.s + em_tail(z) + par * em_tail(-z);

    // RHS: ((-2 pi i)^k/(k-1)!) sum_{r>=1} r^{k-1} e^{2 pi i r z}, geometric tail.
    const Cplx w = std::exp(Cplx(0.0, kTwoPi) * z);
    const double rw = std::abs(w);
    long R = 8;
    auto rhs_tail = [&](long Rc) {
        return 2.0 * std::pow(static_cast<double>(Rc + 1), k - 1) *
               std::pow(rw, static_cast<double>(Rc + 1)) / (1.0 - rw);
    };
    while (rhs_tail(R) > 1e-18 && R < 200000) R *= 2;
    KahanSum racc;
    Cplx wr(1.0, 0.0);
    for (long r = 1; r <= R; ++r) {
        wr *= w;
        racc.add(std::pow(static_cast<double>(r), k - 1) * wr);
    }
    const Cplx coeff = cplx_pow_int(Cplx(0.0, -kTwoPi), k) / factorial_d(k - 1);
    const Cplx rhs = coeff * racc.s;

    return DefectReport::make("classical-lipschitz", k, z, K, lhs, rhs,
                              em_remainder(K) + std::abs(coeff) * rhs_tail(R));
}

Cplx contour_pairing(const RepresentingFunction& rf, const Polynomial& psi, double margin,
                     double tol) {
    if (margin < 0.1)
        throw std::invalid_argument("contour_pairing: margin must be >= 0.1 to clear [0,1]");
    const Cplx integral = integrate_rectangle(
        [&](Cplx z) { return rf.eval(z) * psi.eval(z); }, -margin, 1.0 + margin, margin, tol);
    return Cplx(0.0, 0.5) * integral;
}

Rational pairing_expected(const RepresentingFunction& rf, const Polynomial& psi) {
    switch (rf.kind()) {
        case ReprCase::delta_derivative: {
            const int m = -rf.n();
            Polynomial d = psi;
            for (int i = 0; i < m; ++i) d = d.derivative();
            const Rational v = d.eval(Rational(0));
            return (m % 2 == 0) ? v : -v;
        }
        case ReprCase::log_constant:
            return psi.eval(Rational(0)) - psi.integral_01();
        default:
            return (rf.density() * psi).integral_01();
    }
}

DefectReport boundary_value_check(int n, double x, double eps) {
    if (n > -1) throw std::invalid_argument("boundary_value_check: n must be <= -1");
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("boundary_value_check: x must be in (0,1)");
    if (!(eps > 0.0 && eps <= 0.1)) throw std::invalid_argument("boundary_value_check: eps in (0, 0.1]");

    long trunc = 0;
    auto lhs_at = [&](double e) {
        const double damp = std::exp(-kTwoPi * e);
        const Cplx a = damp * Cplx(std::cos(kTwoPi * x), std::sin(kTwoPi * x));
        const Cplx b = damp * Cplx(std::cos(kTwoPi * x), -std::sin(kTwoPi * x));
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        EvalResult ra = delta_eval(n, a);
        EvalResult rb = delta_eval(n, b);
        trunc = std::max(trunc, std::max(ra.truncation, rb.truncation));
        return ra.value + sign * rb.value;
    };
    const Cplx f0 = lhs_at(eps);
    const Cplx f1 = lhs_at(eps / 2.0);
    const Cplx f2 = lhs_at(eps / 4.0);
    const Cplx r01 = 2.0 * f1 - f0;  // kills the O(eps) layer
    const Cplx r11 = 2.0 * f2 - f1;
    const Cplx lhs = (4.0 * r11 - r01) / 3.0;  // then the O(eps^2) one

    const Cplx pw = cplx_pow_int(Cplx(0.0, kTwoPi), -n);
    const double bval = bernoulli_poly(-n).eval(Cplx(x, 0.0)).real();
    const Cplx rhs = pw * Cplx(-bval / factorial_d(-n), 0.0);

    return DefectReport::make("boundary", n, Cplx(x, 0.0), trunc, lhs, rhs, std::abs(lhs - r11));
}

Cplx periodic_pairing(const RepresentingFunction& rf, int freq, double H, long K, int nodes) {
    if (!(H > 0.0)) throw std::invalid_argument("periodic_pairing: H must be > 0");
    auto edge = [&](double sign_h) {
        KahanSum acc;
        for (int j = 0; j < nodes; ++j) {
            const double xj = (j + 0.5) / nodes;
            const Cplx z(xj, sign_h * H);
            const Cplx xi = std::exp(Cplx(0.0, kTwoPi * freq) * z);
            acc.add(translate_sum(rf, z, K) * xi);
        }
        return acc.s / static_cast<double>(nodes);
    };
    // counterclockwise: lower edge left-to-right, upper edge right-to-left
    return Cplx(0.0, 0.5) * (edge(-1.0) - edge(+1.0));
}

}  // namespace polylip
