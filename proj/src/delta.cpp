#include "polylip/delta.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "polylip/quadrature.hpp"

namespace polylip {
namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr long kMaxSeriesTerms = 2'000'000;

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

void require_finite(Cplx q) {
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
        throw std::domain_error("delta: non-finite argument");
}

// Exact numerator polynomials: delta_n(q) = N_n(q) / (1-q)^{n+1} for n >= 0,
// built by repeated application of q d/dq to q/(1-q).
const Polynomial& closed_numerator(int n) {
    static std::mutex mu;
    static std::vector<Polynomial> table;
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty()) table.push_back(Polynomial({Rational(0), Rational(1)}));  // N_0 = q
    while (static_cast<int>(table.size()) <= n) {
        const int m = static_cast<int>(table.size()) - 1;  // have N_m
        const Polynomial& a = table.back();
        Polynomial one_minus_q({Rational(1), Rational(-1)});
        Polynomial q = Polynomial::monomial(Rational(1), 1);
        Polynomial next = q * (a.derivative() * one_minus_q + a.scaled(Rational(m + 1)));
        table.push_back(std::move(next));
    }
    return table[static_cast<std::size_t>(n)];
}

Cplx closed_form(int n, Cplx q) {
    const Cplx om = Cplx(1.0, 0.0) - q;
    if (std::abs(om) == 0.0) throw std::domain_error("delta: pole at q = 1");
    return closed_numerator(n).eval(q) / cplx_pow_int(om, n + 1);
}

// Proven truncation-tail bounds for sum_{k>K} k^n q^k, n <= -1.
double tail_bound_inside(int n, double r, long K) {
    // k^n <= (K+1)^n for k > K; geometric tail.
    return std::pow(static_cast<double>(K + 1), n) * std::pow(r, static_cast<double>(K + 1)) /
           (1.0 - r);
}

double tail_bound_circle(int n, Cplx q, long K) {
    // Power tail (absolute convergence, n <= -2): int_K^inf x^n dx.
    const double power = std::pow(static_cast<double>(K), n + 1) / (-n - 1.0);
    // Abel summation against bounded geometric partial sums.
    const double abel = 4.0 * std::pow(static_cast<double>(K + 1), n) / std::abs(1.0 - q);
    return std::min(power, abel);
}

long pick_terms_inside(int n, double r, double target) {
    // smallest K with the geometric bound below target (coarse solve + refine)
    if (r <= 0.0) return 1;
    double k = std::log(target * (1.0 - r)) / std::log(r);
    long K = static_cast<long>(std::max(8.0, std::ceil(k)));
    while (K < kMaxSeriesTerms && tail_bound_inside(n, r, K) > target) K *= 2;
    return std::min(K, kMaxSeriesTerms);
}

EvalResult series_eval(int n, Cplx q, double target) {
    const double r = std::abs(q);
    EvalResult out;
    out.method = EvalMethod::series;
    if (r < 1.0 - 1e-12) {
        const long K = pick_terms_inside(n, r, target);
        KahanSum acc;
        Cplx qk(1.0, 0.0);
        for (long k = 1; k <= K; ++k) {
            qk *= q;
            acc.add(std::pow(static_cast<double>(k), n) * qk);
        }
        out.value = acc.s;
        out.truncation = K;
        out.tail_bound = tail_bound_inside(n, r, K);
        return out;
    }
    // On the unit circle: absolutely convergent only for n <= -2 (q = 1
    // included; there the tail is controlled by the power bound alone).
    if (n > -2) throw std::domain_error("delta: series diverges on |q| = 1 for n >= -1");
    const long K = kMaxSeriesTerms;
    KahanSum acc;
    Cplx qk(1.0, 0.0);
    for (long k = 1; k <= K; ++k) {
        qk *= q;
        acc.add(std::pow(static_cast<double>(k), n) * qk);
    }
    out.value = acc.s;
    out.truncation = K;
    out.tail_bound = tail_bound_circle(n, q, K);
    return out;
}

bool on_positive_axis(Cplx q) { return q.imag() == 0.0 && q.real() >= 0.0; }

bool on_cut_from_one(Cplx w) { return w.imag() == 0.0 && w.real() >= 1.0; }

}  // namespace

std::string method_name(EvalMethod m) {
    switch (m) {
        case EvalMethod::series: return "series";
        case EvalMethod::rational_closed_form: return "rational-closed-form";
        default: return "inversion-continuation";
    }
}

Cplx log_positive_cut(Cplx q) {
    require_finite(q);
    if (on_positive_axis(q)) throw std::domain_error("delta: argument on the cut [0,+inf)");
    double theta = std::atan2(q.imag(), q.real());
    if (theta <= 0.0) theta += kTwoPi;
    return Cplx(std::log(std::abs(q)), theta);
}

Cplx cplx_pow_int(Cplx base, int e) {
    if (e < 0) return Cplx(1.0, 0.0) / cplx_pow_int(base, -e);
    Cplx acc(1.0, 0.0);
    Cplx b = base;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1u) acc *= b;
        b *= b;
        u >>= 1u;
    }
    return acc;
}

Cplx inversion_rhs(int n, Cplx q) {
    if (n > 0) return Cplx(0.0, 0.0);
    const Cplx w = log_positive_cut(q) / Cplx(0.0, kTwoPi);
    const Cplx pw = cplx_pow_int(Cplx(0.0, kTwoPi), -n);
    const double fact = Rational::factorial(static_cast<unsigned long>(-n)).to_double();
    return -pw / fact * bernoulli_poly(-n).eval(w);
}

EvalResult delta_eval(int n, Cplx q) {
    require_finite(q);
    if (n >= 0) {
        EvalResult out;
        out.value = closed_form(n, q);
        out.truncation = 0;
        out.tail_bound = 0.0;
        out.method = EvalMethod::rational_closed_form;
        return out;
    }
    const double r = std::abs(q);
    if (r <= 1.0 + 1e-12) return series_eval(n, q, 1e-15);
    // |q| > 1: rearranged inversion equation through delta_n(1/q); requires
    // q off the cut [0,+inf) so that the Bernoulli term is single-valued.
    const Cplx rhs = inversion_rhs(n, q);
    EvalResult inner = delta_eval(n, Cplx(1.0, 0.0) / q);
    EvalResult out;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    out.value = rhs - sign * inner.value;
    out.truncation = inner.truncation;
    out.tail_bound = inner.tail_bound;
    out.method = EvalMethod::inversion_continuation;
    return out;
}

Cplx delta_reference(int n, Cplx w) {
    require_finite(w);
    if (n >= 0) return closed_form(n, w);
    if (on_cut_from_one(w)) throw std::domain_error("delta: argument on the cut [1,+inf)");
    if (n == -1) return -std::log(Cplx(1.0, 0.0) - w);
    if (std::abs(w) <= 1.0 + 1e-12) return series_eval(n, w, 1e-16).value;
    return integrate(
        [&](double u) {
            if (u == 0.0) return w;  // limit of delta_{n+1}(uw)/u at u = 0
            return delta_reference(n + 1, u * w) / u;
        },
        0.0, 1.0, 5e-13);
}

double inversion_defect(int n, Cplx q) {
    require_finite(q);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    if (n >= 1) {
        if (std::abs(Cplx(1.0, 0.0) - q) == 0.0 || std::abs(q) == 0.0)
            throw std::domain_error("delta: inversion needs q != 0, 1");
        const Cplx lhs = closed_form(n, q) + sign * closed_form(n, Cplx(1.0, 0.0) / q);
        return std::abs(lhs);
    }
    const Cplx rhs = inversion_rhs(n, q);  // also rejects the cut
    const Cplx lhs = delta_reference(n, q) + sign * delta_reference(n, Cplx(1.0, 0.0) / q);
    return std::abs(lhs - rhs);
}

double root_of_unity_check(int n, int k, Cplx q) {
    require_finite(q);
    if (k < 2) throw std::invalid_argument("root_of_unity_check: k must be >= 2");
    const double r = std::abs(q);
    if (r > 1.0 + 1e-12 || (r > 1.0 - 1e-12 && n > -2))
        throw std::domain_error("root_of_unity_check: |q| < 1 required (closed disk for n <= -2)");
    const Cplx lhs = delta_eval(n, cplx_pow_int(q, k)).value;
    KahanSum acc;
    for (int j = 0; j < k; ++j) {
        const double th = kTwoPi * j / k;
        acc.add(delta_eval(n, q * Cplx(std::cos(th), std::sin(th))).value);
    }
    const Cplx rhs = std::pow(static_cast<double>(k), -1.0 - n) * acc.s;
    return std::abs(lhs - rhs);
}

namespace {

// Per-j complex weights (phi_j/j!) (2 pi i)^{j-1} over the sign case's parity.
std::vector<std::pair<int, Cplx>> extended_weights(const ExtendedDeltaSpec& spec) {
    const int m = -spec.n;
    if (static_cast<int>(spec.phi.values.size()) < m)
        throw std::invalid_argument("extended delta: phi vector shorter than -n");
    std::vector<std::pair<int, Cplx>> out;
    for (int j = 1; j <= m; ++j) {
        const bool odd = (j % 2 == 1);
        if ((spec.sign_case == SignCase::p_case) != odd) continue;
        const Rational& pj = spec.phi.values[static_cast<std::size_t>(j) - 1];
        if (pj.is_zero()) continue;
        const Cplx w = (pj / Rational::factorial(static_cast<unsigned long>(j))).to_double() *
                       cplx_pow_int(Cplx(0.0, kTwoPi), j - 1);
        out.emplace_back(j, w);
    }
    return out;
}

Cplx extended_reference(const ExtendedDeltaSpec& spec, Cplx w) {
    Cplx acc(0.0, 0.0);
    for (const auto& [j, wt] : extended_weights(spec)) acc += wt * delta_reference(spec.n + j - 1, w);
    return acc;
}

}  // namespace

EvalResult extended_delta_eval(const ExtendedDeltaSpec& spec, Cplx q) {
    require_finite(q);
    const int n = spec.n;
    if (n > 0) return delta_eval(n, q);
    if (n == 0) {
        EvalResult out;
        out.value = closed_form(0, q);
        out.truncation = 0;
        out.tail_bound = 0.0;
        out.method = EvalMethod::rational_closed_form;
        return out;
    }
    const auto weights = extended_weights(spec);
    const double r = std::abs(q);
    if (r <= 1.0 + 1e-12) {
        if (r > 1.0 - 1e-12 && n > -2)
            throw std::domain_error("extended delta: series diverges on |q| = 1 for n >= -1");
        double csum = 0.0;
        for (const auto& [j, wt] : weights) csum += std::abs(wt);
        EvalResult out;
        out.method = EvalMethod::series;
        long K;
        double bound;
        if (r < 1.0 - 1e-12) {
            // |a_k| <= csum / k since k^{n+j-1} <= k^{-1} for j <= -n
            K = pick_terms_inside(-1, r, 1e-15 / std::max(csum, 1e-300));
            bound = csum * tail_bound_inside(-1, r, K);
        } else {
            if (std::abs(Cplx(1.0, 0.0) - q) < 1e-9)
                throw std::domain_error("extended delta: q too close to 1");
            K = kMaxSeriesTerms;
            bound = 4.0 * csum / (static_cast<double>(K + 1) * std::abs(1.0 - q));
        }
        KahanSum acc;
        Cplx qk(1.0, 0.0);
        for (long k = 1; k <= K; ++k) {
            qk *= q;
            Cplx ak(0.0, 0.0);
            for (const auto& [j, wt] : weights)
                ak += wt * std::pow(static_cast<double>(k), n + j - 1);
            acc.add(ak * qk);
        }
        out.value = acc.s;
        out.truncation = K;
        out.tail_bound = bound;
        return out;
    }
    // |q| > 1 off the cut: finite combination of continued classical deltas.
    EvalResult out;
    out.method = EvalMethod::inversion_continuation;
    out.truncation = 0;
    out.tail_bound = 0.0;
    Cplx acc(0.0, 0.0);
    for (const auto& [j, wt] : weights) {
        EvalResult part = delta_eval(n + j - 1, q);
        acc += wt * part.value;
        out.truncation = std::max(out.truncation, part.truncation);
        out.tail_bound += std::abs(wt) * part.tail_bound;
    }
    out.value = acc;
    return out;
}

Polynomial case_polynomial(const PhiVector& phi, int m, SignCase sc) {
    if (m < 0) throw std::invalid_argument("case_polynomial: m must be >= 0");
    Polynomial acc;
    const Rational mfact = Rational::factorial(static_cast<unsigned long>(m));
    for (int j = 1; j <= m && j <= static_cast<int>(phi.values.size()); ++j) {
        const bool odd = (j % 2 == 1);
        if ((sc == SignCase::p_case) != odd) continue;
        const Rational& pj = phi.values[static_cast<std::size_t>(j) - 1];
        if (pj.is_zero()) continue;
        const Rational scale = mfact * pj /
                               (Rational::factorial(static_cast<unsigned long>(j)) *
                                Rational::factorial(static_cast<unsigned long>(m + 1 - j)));
        acc = acc + bernoulli_poly(m + 1 - j).scaled(scale);
    }
    return acc;
}

double extended_inversion_defect(const ExtendedDeltaSpec& spec, Cplx q) {
    require_finite(q);
    const int n = spec.n;
    if (n >= 1) {
        // Delta_n = delta_n for n > 0; only the classical sign closes.
        return inversion_defect(n, q);
    }
    const double case_sign = (spec.sign_case == SignCase::p_case) ? 1.0 : -1.0;
    const double sign = ((n % 2 == 0) ? 1.0 : -1.0) * case_sign;
    if (n == 0) {
        const Cplx lhs = closed_form(0, q) + sign * closed_form(0, Cplx(1.0, 0.0) / q);
        // P-case closes against the unsubtracted A_0 = 1 (the classical B_0
        // value); the literal Q-case right side is the zero polynomial.
        const Cplx rhs = (spec.sign_case == SignCase::p_case) ? Cplx(-1.0, 0.0) : Cplx(0.0, 0.0);
        log_positive_cut(q);  // domain check
        return std::abs(lhs - rhs);
    }
    const Cplx lhs = extended_reference(spec, q) + sign * extended_reference(spec, Cplx(1.0, 0.0) / q);
    const Cplx w = log_positive_cut(q) / Cplx(0.0, kTwoPi);
    const Cplx pw = cplx_pow_int(Cplx(0.0, kTwoPi), -n);
    const double fact = Rational::factorial(static_cast<unsigned long>(-n)).to_double();
    const Cplx rhs = -pw / fact * case_polynomial(spec.phi, -n, spec.sign_case).eval(w);
    return std::abs(lhs - rhs);
}

}  // namespace polylip
