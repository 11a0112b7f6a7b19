#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polylip/multipoly.hpp"
#include "polylip/polynomial.hpp"
#include "polylip/rational.hpp"
#include "polylip/series.hpp"

using namespace polylip;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

RatSeries rat_series(std::vector<long> nums, std::vector<long> dens) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < nums.size(); ++i) c.emplace_back(nums[i], dens[i]);
    return RatSeries(std::move(c));
}

// Independent oracle: Bernoulli numbers from the defining recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1.
std::vector<Rational> bernoulli_recurrence(int N) {
    std::vector<Rational> b{Q(1)};
    for (int n = 1; n <= N; ++n) {
        Rational acc(0);
        for (int k = 0; k < n; ++k) acc += Rational::binomial(n + 1, k) * b[(std::size_t)k];
        b.push_back(-acc / Rational::binomial(n + 1, n));
    }
    return b;
}

std::mt19937 rng(20260809);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return Rational(num(rng), den(rng));
}

RatSeries random_series(std::size_t order) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.push_back(random_rational());
    return RatSeries(std::move(c));
}

}  // namespace

TEST_CASE("rational basics and serialization") {
    CHECK(Rational(2, 4) == Q(1, 2));
    CHECK(Rational(-2, -4) == Q(1, 2));
    CHECK(Rational(2, -4) == Q(-1, 2));
    CHECK(Q(1, 2).str() == "1/2");
    CHECK(Q(-3).str() == "-3");
    CHECK(Rational::from_string("-7/3") == Q(-7, 3));
    CHECK(Rational::from_string("5") == Q(5));
    CHECK_THROWS(Rational::from_string("x"));
    CHECK_THROWS(Rational(1, 0));
    CHECK(Q(3, 4) + Q(1, 4) == Q(1));
    CHECK(Q(1, 3) * Q(3, 5) == Q(1, 5));
    CHECK(Q(1, 3).inverse() == Q(3));
    CHECK(Q(-50, 12).p_valuation(2) == -1);
    CHECK(Q(-50, 12).p_valuation(5) == 2);
    CHECK(Q(7, 15).fractional_part() == Q(7, 15));
    CHECK(Q(-1, 3).fractional_part() == Q(2, 3));
    CHECK(Rational::factorial(6) == Q(720));
    CHECK(Rational::binomial(7, 3) == Q(35));
    CHECK(Q(-2, 3).pow(3) == Q(-8, 27));
}

TEST_CASE("series_mul examples") {
    // (1 + t)(1 - t) at N=2 -> 1 - t^2
    auto a = rat_series({1, 1, 0}, {1, 1, 1});
    auto b = rat_series({1, -1, 0}, {1, 1, 1});
    auto p = a * b;
    CHECK(p.coeff(0) == Q(1));
    CHECK(p.coeff(1) == Q(0));
    CHECK(p.coeff(2) == Q(-1));

    // a * 1 = a
    auto one = rat_series({1, 0, 0}, {1, 1, 1});
    CHECK(a * one == a);

    // (sum t^k/k!)^2: first three coefficients 1, 2, 2 (hand convolution)
    std::vector<Rational> e;
    for (int k = 0; k <= 6; ++k) e.push_back(Rational::factorial(k).inverse());
    RatSeries exp_series(e);
    auto sq = exp_series * exp_series;
    CHECK(sq.coeff(0) == Q(1));
    CHECK(sq.coeff(1) == Q(2));
    CHECK(sq.coeff(2) == Q(2));

    CHECK_THROWS_AS(a * rat_series({1, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("series_div examples") {
    // 1/(1-t) at N=3 -> geometric
    auto one = rat_series({1, 0, 0, 0}, {1, 1, 1, 1});
    auto den = rat_series({1, -1, 0, 0}, {1, 1, 1, 1});
    auto g = series_div(one, den);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(g.coeff(i) == Q(1));

    // a / a = 1
    auto a = rat_series({3, 1, -2, 5}, {2, 3, 1, 7});
    auto r = series_div(a, a);
    CHECK(r.coeff(0) == Q(1));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(r.coeff(i) == Q(0));

    // t/(e^t - 1) at N=4: Bernoulli B_k/k! against the recurrence oracle
    std::vector<Rational> h;
    for (int k = 0; k <= 4; ++k) h.push_back(Rational::factorial(k + 1).inverse());
    auto quotient = series_div(rat_series({1, 0, 0, 0, 0}, {1, 1, 1, 1, 1}), RatSeries(h));
    auto oracle = bernoulli_recurrence(4);
    for (int k = 0; k <= 4; ++k)
        CHECK(quotient.coeff((std::size_t)k) ==
              oracle[(std::size_t)k] / Rational::factorial((unsigned long)k));
    CHECK(quotient.coeff(1) == Q(-1, 2));
    CHECK(quotient.coeff(2) == Q(1, 12));
    CHECK(quotient.coeff(3) == Q(0));
    CHECK(quotient.coeff(4) == Q(-1, 720));

    // non-unit constant term rejected
    CHECK_THROWS_AS(series_div(one, rat_series({0, 1, 0, 0}, {1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("series_compose examples") {
    const std::size_t N = 5;
    // identity outer / inner
    auto f = random_series(N);
    auto id = RatSeries::identity(N, Rational(0));
    f.coeff(0) = Q(0);
    CHECK(series_compose(id, f) == f);
    CHECK(series_compose(f, id) == f);

    // log(1+s) o (e^t - 1) = t
    std::vector<Rational> lg{Q(0)}, em{Q(0)};
    for (int k = 1; k <= (int)N; ++k) {
        lg.push_back(Q(k % 2 ? 1 : -1, k));
        em.push_back(Rational::factorial((unsigned long)k).inverse());
    }
    auto composed = series_compose(RatSeries(lg), RatSeries(em));
    CHECK(composed == RatSeries::identity(N, Rational(0)));

    CHECK_THROWS_AS(series_compose(f, rat_series({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1})),
                    std::domain_error);
}

TEST_CASE("series_reversion: trivial, universal and specialized") {
    // reversion(s) = t
    auto id = RatSeries::identity(3, Rational(0));
    CHECK(series_revert(id) == id);

    // reversion of s + c1 s^2/2 + c2 s^3/3 over Q[c1,c2]:
    // t - c1 t^2/2 + (3 c1^2 - 2 c2) t^3/6
    const std::size_t arity = 2;
    std::vector<MultiPoly> c(4, MultiPoly(arity));
    c[1] = MultiPoly::constant(arity, Q(1));
    c[2] = MultiPoly::variable(arity, 1).scaled(Q(1, 2));
    c[3] = MultiPoly::variable(arity, 2).scaled(Q(1, 3));
    auto g = series_revert(PolySeries(c));
    CHECK(g.coeff(1) == MultiPoly::constant(arity, Q(1)));
    CHECK(g.coeff(2) == MultiPoly::variable(arity, 1).scaled(Q(-1, 2)));
    MultiPoly expected3 = MultiPoly::variable(arity, 1).pow(2).scaled(Q(1, 2)) -
                          MultiPoly::variable(arity, 2).scaled(Q(1, 3));
    CHECK(g.coeff(3) == expected3);

    // all c_i = 1: s + s^2/2 + s^3/3 + s^4/4 reverts to 1, -1/2, 1/6 (from the
    // universal coefficients: (3 - 2)/6 = 1/6)
    auto f = rat_series({0, 1, 1, 1, 1}, {1, 1, 2, 3, 4});
    auto r = series_revert(f);
    CHECK(r.coeff(1) == Q(1));
    CHECK(r.coeff(2) == Q(-1, 2));
    CHECK(r.coeff(3) == Q(1, 6));

    // zero linear coefficient is not a unit; nonzero constant term rejected
    CHECK_THROWS_AS(series_revert(rat_series({0, 0, 1}, {1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(series_revert(rat_series({1, 1, 1}, {1, 1, 1})), std::domain_error);
    // a rational linear coefficient != 1 is still a unit and round-trips
    auto f2 = rat_series({0, 2, 1, -3}, {1, 1, 1, 5});
    CHECK(series_compose(f2, series_revert(f2)) == RatSeries::identity(3, Rational(0)));
}

TEST_CASE("reversion round-trip property, orders up to 12") {
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<std::size_t> ord(2, 12);
        const std::size_t N = ord(rng);
        auto f = random_series(N);
        f.coeff(0) = Q(0);
        f.coeff(1) = Q(1);
        auto g = series_revert(f);
        auto id = RatSeries::identity(N, Rational(0));
        CHECK(series_compose(f, g) == id);
        CHECK(series_compose(g, f) == id);
    }
}

TEST_CASE("series_mul commutative and associative on random series") {
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_series(6), b = random_series(6), c = random_series(6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("polynomial eval, derivative, integral") {
    // B_2(x) = x^2 - x + 1/6
    Polynomial b2({Q(1, 6), Q(-1), Q(1)});
    CHECK(b2.eval(Q(0)) == Q(1, 6));
    CHECK(b2.derivative() == Polynomial({Q(-1), Q(2)}));  // 2 B_1
    CHECK(b2.integral_01() == Q(0));

    Polynomial b1({Q(-1, 2), Q(1)});
    CHECK(b1.eval(Q(1, 2)) == Q(0));
    CHECK(b1.eval(Q(0)) == Q(-1, 2));
    CHECK(b1.integral_01() == Q(0));
    CHECK(Polynomial({Q(42)}).eval(Q(17)) == Q(42));

    // eval(p*q, x) = eval(p,x) eval(q,x)
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> pc, qc;
        for (int i = 0; i < 5; ++i) pc.push_back(random_rational());
        for (int i = 0; i < 4; ++i) qc.push_back(random_rational());
        Polynomial p(pc), q(qc);
        Rational x = random_rational();
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    }

    // shift: p(x+a)
    Polynomial p({Q(1), Q(2), Q(3)});
    Polynomial sh = p.shifted(Q(1));
    CHECK(sh.eval(Q(0)) == p.eval(Q(1)));
    CHECK(sh.eval(Q(-3, 2)) == p.eval(Q(-1, 2)));

    CHECK(p.moment(0) == p.integral_01());
    CHECK(Polynomial({Q(0), Q(1)}).moment(1) == Q(1, 3));  // int x^2
}

TEST_CASE("polynomial JSON round trip and format") {
    Polynomial p({Q(1, 6), Q(-1), Q(1)});
    CHECK(p.to_json() == "[\"1/6\",\"-1\",\"1\"]");
    CHECK(Polynomial::from_json(p.to_json()) == p);
    CHECK(p.str() == "x^2 - x + 1/6");
    CHECK(Polynomial().to_json() == "[]");
    CHECK(Polynomial().str() == "0");
}

TEST_CASE("multipoly arithmetic agrees with specialization") {
    const std::size_t arity = 3;
    auto c1 = MultiPoly::variable(arity, 1);
    auto c2 = MultiPoly::variable(arity, 2);
    auto c3 = MultiPoly::variable(arity, 3);
    auto p = c1 * c1.scaled(Q(3)) - c2.scaled(Q(2)) + MultiPoly::constant(arity, Q(5, 7));
    auto q = c3 * c1 + c2.pow(2).scaled(Q(-1, 3));

    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> v{random_rational(), random_rational(), random_rational()};
        auto sum = (p + q).specialize(v);
        auto prod = (p * q).specialize(v);
        CHECK(sum == p.specialize(v) + q.specialize(v));
        CHECK(prod == p.specialize(v) * q.specialize(v));
    }
}

TEST_CASE("multipoly invariants and serialization") {
    const std::size_t arity = 2;
    auto c1 = MultiPoly::variable(arity, 1);
    auto diff = c1 - c1;
    CHECK(diff.is_zero());
    CHECK(diff.term_count() == 0);  // no zero coefficients stored

    // graded-lex order: constant, then degree-1 terms lexicographically
    auto p = c1.pow(2).scaled(Q(-3, 6)) + MultiPoly::variable(arity, 2).scaled(Q(2, 3));
    CHECK(p.to_json() ==
          "[{\"exponents\":[0,1],\"coeff\":\"2/3\"},{\"exponents\":[2,0],\"coeff\":\"-1/2\"}]");
    CHECK_THROWS_AS(MultiPoly::variable(arity, 1) + MultiPoly::variable(3, 1),
                    std::invalid_argument);

    CHECK(p.min_p_valuation(2) == -1);
    CHECK(p.min_p_valuation(3) == -1);
    CHECK_FALSE(p.all_coeffs_integer());
    CHECK(c1.pow(3).all_coeffs_integer());
}

TEST_CASE("mixed-ring series guardrails") {
    // MultiPoly series division by a non-constant unit is rejected
    const std::size_t arity = 1;
    std::vector<MultiPoly> a(3, MultiPoly(arity)), b(3, MultiPoly(arity));
    a[0] = MultiPoly::constant(arity, Q(1));
    b[0] = MultiPoly::variable(arity, 1);  // constant term c1: not a unit
    CHECK_THROWS_AS(series_div(PolySeries(a), PolySeries(b)), std::domain_error);
    b[0] = MultiPoly::constant(arity, Q(2));
    auto q = series_div(PolySeries(a), PolySeries(b));
    CHECK(q.coeff(0) == MultiPoly::constant(arity, Q(1, 2)));
}
