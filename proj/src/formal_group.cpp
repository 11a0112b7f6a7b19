#include "polylip/formal_group.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace polylip {
namespace {

PolySeries universal_log(int order) {
    // F(s) = s + sum_{i>=1} c_i s^{i+1}/(i+1), arity = order - 1.
    const std::size_t arity = static_cast<std::size_t>(order) - 1;
    std::vector<MultiPoly> c(static_cast<std::size_t>(order) + 1, MultiPoly(arity));
    c[1] = MultiPoly::constant(arity, Rational(1));
    for (int i = 1; i + 1 <= order; ++i)
        c[static_cast<std::size_t>(i) + 1] =
            MultiPoly::variable(arity, static_cast<std::size_t>(i)).scaled(Rational(1, i + 1));
    return PolySeries(std::move(c));
}

// Triangular bivariate series over MultiPoly, truncated at total degree N.
using BiPoly = std::vector<std::vector<MultiPoly>>;

BiPoly bi_zero(int N, std::size_t arity) {
    BiPoly b(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i)
        b[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(N - i) + 1, MultiPoly(arity));
    return b;
}

BiPoly bi_mul(const BiPoly& a, const BiPoly& b, int N, std::size_t arity) {
    BiPoly r = bi_zero(N, arity);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b[k].size(); ++l) {
                    if (b[k][l].is_zero()) continue;
                    if (i + j + k + l > static_cast<std::size_t>(N)) continue;
                    r[i + k][j + l] = r[i + k][j + l] + a[i][j] * b[k][l];
                }
        }
    return r;
}

}  // namespace

FormalGroupData build_formal_group(int N) {
    if (N < 2 || N > 16) throw std::invalid_argument("build_formal_group: order must be in [2,16]");
    PolySeries F = universal_log(N);
    PolySeries G = series_revert(F);
    // The reversion contract is part of the data's invariants.
    if (series_compose(F, G) != PolySeries::identity(F.order(), F.coeff(0)) ||
        series_compose(G, F) != PolySeries::identity(F.order(), F.coeff(0)))
        throw std::logic_error("build_formal_group: reversion round-trip failed");
    return FormalGroupData{N, std::move(F), std::move(G)};
}

std::vector<std::vector<MultiPoly>> formal_group_law(const FormalGroupData& fg) {
    const int N = fg.order;
    const std::size_t arity = fg.F.coeff(0).arity();
    // u = F(s1) + F(s2) as a bivariate series (no constant term).
    BiPoly u = bi_zero(N, arity);
    for (int k = 1; k <= N; ++k) {
        u[static_cast<std::size_t>(k)][0] = u[static_cast<std::size_t>(k)][0] + fg.F.coeff(static_cast<std::size_t>(k));
        u[0][static_cast<std::size_t>(k)] = u[0][static_cast<std::size_t>(k)] + fg.F.coeff(static_cast<std::size_t>(k));
    }
    // Horner: G(u) truncated at total degree N.
    BiPoly acc = bi_zero(N, arity);
    for (int k = N; k >= 0; --k) {
        acc = bi_mul(acc, u, N, arity);
        acc[0][0] = acc[0][0] + fg.G.coeff(static_cast<std::size_t>(k));
    }
    return acc;
}

namespace {

// B^_n by Lagrange-Buermann applied to (F/u)(G(t)) = t/G(t):
//   [t^n] t/G = (1/n) [s^{n-1}] (F/s)'(s) (s/F(s))^n,
// which sidesteps the reversion entirely. B^_n involves c_1..c_n only.
UniversalBernoulli compute_universal_bernoulli(int N) {
    const std::size_t arity = static_cast<std::size_t>(std::max(N, 1));
    const std::size_t order = static_cast<std::size_t>(std::max(N, 1));

    std::vector<MultiPoly> h(order + 1, MultiPoly(arity));  // F/s
    std::vector<MultiPoly> hp(order + 1, MultiPoly(arity)); // (F/s)'
    h[0] = MultiPoly::constant(arity, Rational(1));
    for (std::size_t i = 1; i <= order; ++i) {
        h[i] = MultiPoly::variable(arity, i).scaled(Rational(1, static_cast<long>(i) + 1));
        hp[i - 1] = MultiPoly::variable(arity, i)
                        .scaled(Rational(static_cast<long>(i), static_cast<long>(i) + 1));
    }
    PolySeries h_series(h);
    std::vector<MultiPoly> one(order + 1, MultiPoly(arity));
    one[0] = MultiPoly::constant(arity, Rational(1));
    PolySeries w = series_div(PolySeries(std::move(one)), h_series);  // s/F(s)

    UniversalBernoulli out;
    out.order = N;
    out.numbers.reserve(static_cast<std::size_t>(N) + 1);
    out.numbers.push_back(MultiPoly::constant(arity, Rational(1)));
    PolySeries cur = PolySeries(std::move(hp));  // (F/s)' W^n, built up iteratively
    Rational fact(1);
    for (int n = 1; n <= N; ++n) {
        cur = cur * w;
        if (n > 1) fact *= Rational(n - 1);
        out.numbers.push_back(cur.coeff(static_cast<std::size_t>(n) - 1).scaled(fact));
    }
    return out;
}

// Drop the unused trailing variables so arity matches the requested order.
MultiPoly shrink_arity(const MultiPoly& p, std::size_t arity) {
    MultiPoly out(arity);
    for (const auto& [e, c] : p.terms()) {
        std::vector<std::uint32_t> exps(e.begin(), e.begin() + static_cast<long>(arity));
        for (std::size_t i = arity; i < e.size(); ++i)
            if (e[i] != 0) throw std::logic_error("universal_bernoulli: weight bound violated");
        out.add_term(exps, c);
    }
    return out;
}

}  // namespace

UniversalBernoulli universal_bernoulli(int N) {
    if (N < 0 || N > 20) throw std::invalid_argument("universal_bernoulli: order must be in [0,20]");
    static std::mutex mu;
    static UniversalBernoulli cache{-1, {}};
    std::lock_guard<std::mutex> lock(mu);
    if (cache.order < N) cache = compute_universal_bernoulli(N);
    UniversalBernoulli out;
    out.order = N;
    const std::size_t arity = static_cast<std::size_t>(std::max(N, 1));
    for (int n = 0; n <= N; ++n)
        out.numbers.push_back(shrink_arity(cache.numbers[static_cast<std::size_t>(n)], arity));
    return out;
}

std::vector<std::vector<MultiPoly>> universal_bernoulli_polys(int N) {
    const UniversalBernoulli ub = universal_bernoulli(N);
    const std::size_t arity = ub.numbers.front().arity();
    std::vector<std::vector<MultiPoly>> polys(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        auto& row = polys[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, MultiPoly(arity));
        for (int d = 0; d <= n; ++d)
            row[static_cast<std::size_t>(d)] =
                ub.numbers[static_cast<std::size_t>(n - d)].scaled(Rational::binomial(n, d));
    }
    return polys;
}

std::vector<Rational> classical_specialization(std::size_t arity) {
    std::vector<Rational> v(arity);
    for (std::size_t i = 0; i < arity; ++i) v[i] = (i % 2 == 0) ? Rational(-1) : Rational(1);
    return v;
}

std::vector<Rational> descriptor_specialization(const AppellDescriptor& d, int N) {
    // G_d(t) = (e^t - 1) g(t) to order N+1, then c_i = (i+1) [s^{i+1}] revert(G_d).
    const std::size_t order = static_cast<std::size_t>(N) + 1;
    if (d.g.order() < order)
        throw std::invalid_argument("descriptor_specialization: descriptor series too short");
    std::vector<Rational> gd(order + 1, Rational(0));
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j)
            acc += Rational::factorial(j).inverse() * d.g.coeff(k - j);
        gd[k] = acc;
    }
    RatSeries Fd = series_revert(RatSeries(std::move(gd)));
    std::vector<Rational> c(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i)
        c[static_cast<std::size_t>(i) - 1] = Fd.coeff(static_cast<std::size_t>(i) + 1) * Rational(i + 1);
    return c;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

CongruenceVerdict von_staudt_check(int n) {
    if (n < 2 || n > 14) throw std::invalid_argument("von_staudt_check: n must be in [2,14]");
    const UniversalBernoulli ub = universal_bernoulli(n);
    const MultiPoly& bn = ub.numbers[static_cast<std::size_t>(n)];
    const std::size_t arity = bn.arity();
    CongruenceVerdict v;
    v.n = n;
    v.p = 0;
    if (n % 2 == 0) {
        v.id = CongruenceId::US1;
        MultiPoly w = bn;
        for (int p = 2; p <= n + 1; ++p) {
            if (!is_prime(p) || n % (p - 1) != 0) continue;
            w = w + MultiPoly::variable(arity, static_cast<std::size_t>(p) - 1)
                        .pow(static_cast<unsigned>(n / (p - 1)))
                        .scaled(Rational(1, p));
        }
        v.holds = w.all_coeffs_integer();
        v.witness = w.to_json();
        v.notes = "B^_n + sum_{(p-1)|n} c_{p-1}^{n/(p-1)}/p";
    } else {
        v.id = CongruenceId::US2;
        MultiPoly corr = MultiPoly::variable(arity, 1).pow(static_cast<unsigned>(n));
        if (n >= 3)
            corr = corr + MultiPoly::variable(arity, 1).pow(static_cast<unsigned>(n - 3)) *
                              MultiPoly::variable(arity, 3);
        MultiPoly w = bn - corr.scaled(Rational(1, 2));
        v.holds = w.all_coeffs_integer();
        v.witness = w.to_json();
        v.notes = "B^_n - (c_1^n + c_1^{n-3} c_3)/2";
    }
    return v;
}

CongruenceVerdict kummer_check(int n, int p) {
    CongruenceVerdict v;
    v.id = CongruenceId::UK;
    v.n = n;
    v.p = p;
    if (!is_prime(p)) throw std::invalid_argument("kummer_check: p must be prime");
    if (n < 2 || n + p - 1 > 14)
        throw std::invalid_argument("kummer_check: need 2 <= n and n + p - 1 <= 14");
    const int r = n % (p - 1);
    if (r == 0 || r == 1) {
        v.applicable = false;
        v.holds = false;
        v.witness = "null";
        v.notes = "inapplicable: n = 0 or 1 (mod p-1)";
        return v;
    }
    const UniversalBernoulli ub = universal_bernoulli(n + p - 1);
    const std::size_t arity = ub.numbers.front().arity();
    MultiPoly w = ub.numbers[static_cast<std::size_t>(n + p - 1)].scaled(Rational(1, n + p - 1)) -
                  ub.numbers[static_cast<std::size_t>(n)].scaled(Rational(1, n)) *
                      MultiPoly::variable(arity, static_cast<std::size_t>(p) - 1);
    v.holds = w.is_zero() || w.min_p_valuation(static_cast<unsigned long>(p)) >= 1;
    v.witness = w.to_json();
    v.notes = "B^_{n+p-1}/(n+p-1) - (B^_n/n) c_{p-1} in pZ_p[c]";
    return v;
}

CongruenceVerdict classical_cvs_check(int n) {
    CongruenceVerdict v;
    v.id = CongruenceId::CvS;
    v.n = n;
    v.p = 0;
    if (n < 2 || n > 30) throw std::invalid_argument("classical_cvs_check: n must be in [2,30]");
    if (n % 2 != 0) {
        v.applicable = false;
        v.holds = false;
        const Rational bn = bernoulli_numbers(n)[static_cast<std::size_t>(n)];
        v.witness = "\"" + bn.str() + "\"";
        v.notes = "odd n: B_n = " + bn.str() + ", congruence stated for even n";
        return v;
    }
    Rational r = bernoulli_numbers(n)[static_cast<std::size_t>(n)];
    for (int p = 2; p <= n + 1; ++p)
        if (is_prime(p) && n % (p - 1) == 0) r += Rational(1, p);
    v.holds = r.is_integer();
    v.witness = "\"" + r.str() + "\"";
    v.notes = "classical condition (p-1)|n; the p|n variant fails at n=4";
    return v;
}

Rational cvs_p_divides_n_remainder(int n) {
    Rational r = bernoulli_numbers(n)[static_cast<std::size_t>(n)];
    for (int p = 2; p <= n; ++p)
        if (is_prime(p) && n % p == 0) r += Rational(1, p);
    return r;
}

}  // namespace polylip
