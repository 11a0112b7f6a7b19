#pragma once

#include <stdexcept>
#include <vector>

#include "polylip/multipoly.hpp"
#include "polylip/rational.hpp"

namespace polylip {

// Ring glue. A Series<R> needs zero/one elements shaped like its
// coefficients (MultiPoly carries an arity) plus unit tests and inversion of
// the constant term for division.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_unit_elem(const Rational& x) { return !x.is_zero(); }
inline Rational invert_elem(const Rational& x) { return x.inverse(); }

inline MultiPoly zero_like(const MultiPoly& m) { return MultiPoly(m.arity()); }
inline MultiPoly one_like(const MultiPoly& m) { return MultiPoly::constant(m.arity(), Rational(1)); }
// Only nonzero rational constants are invertible in Q[c_1..c_m].
inline bool is_unit_elem(const MultiPoly& m) { return m.is_constant() && !m.is_zero(); }
inline MultiPoly invert_elem(const MultiPoly& m) {
    if (!is_unit_elem(m)) throw std::domain_error("Series: non-unit constant term in Q[c...]");
    return MultiPoly::constant(m.arity(), m.constant_term().inverse());
}

/// Power series over R truncated at a fixed order N: coefficients of
/// t^0..t^N, nothing beyond N is ever claimed. All operations are exact and
/// require equal orders (and for MultiPoly, equal arities).
template <class R>
class Series {
public:
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Series: needs at least the t^0 coefficient");
    }
    static Series zero(std::size_t order, const R& proto) {
        return Series(std::vector<R>(order + 1, zero_like(proto)));
    }
    static Series identity(std::size_t order, const R& proto) {  // the series t
        auto s = zero(order, proto);
        if (order >= 1) s.c_[1] = one_like(proto);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const R& coeff(std::size_t i) const { return c_.at(i); }
    R& coeff(std::size_t i) { return c_.at(i); }
    const std::vector<R>& coeffs() const { return c_; }

    friend Series operator+(const Series& a, const Series& b) {
        a.check_compatible(b);
        std::vector<R> v;
        v.reserve(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v.push_back(a.c_[i] + b.c_[i]);
        return Series(std::move(v));
    }
    friend Series operator-(const Series& a, const Series& b) {
        a.check_compatible(b);
        std::vector<R> v;
        v.reserve(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v.push_back(a.c_[i] - b.c_[i]);
        return Series(std::move(v));
    }

    /// Cauchy product truncated at the common order.
    friend Series operator*(const Series& a, const Series& b) {
        a.check_compatible(b);
        const std::size_t n = a.order();
        std::vector<R> v(n + 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i <= n; ++i) {
            if (elem_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Series(std::move(v));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series scaled(const R& s) const {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(x * s);
        return Series(std::move(v));
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!elem_is_zero(x)) return false;
        return true;
    }

private:
    void check_compatible(const Series& o) const {
        if (order() != o.order()) throw std::invalid_argument("Series: order mismatch");
        check_ring(c_[0], o.c_[0]);
    }
    static bool elem_is_zero(const Rational& x) { return x.is_zero(); }
    static bool elem_is_zero(const MultiPoly& x) { return x.is_zero(); }
    static void check_ring(const Rational&, const Rational&) {}
    static void check_ring(const MultiPoly& a, const MultiPoly& b) {
        if (a.arity() != b.arity()) throw std::invalid_argument("Series: coefficient arity mismatch");
    }

    std::vector<R> c_;
};

/// a / b to the common order; b must have a unit constant term.
template <class R>
Series<R> series_div(const Series<R>& a, const Series<R>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("Series: order mismatch");
    if (!is_unit_elem(b.coeff(0)))
        throw std::domain_error("Series: division requires a unit constant term");
    const std::size_t n = a.order();
    const R inv0 = invert_elem(b.coeff(0));
    std::vector<R> q(n + 1, zero_like(a.coeff(0)));
    for (std::size_t k = 0; k <= n; ++k) {
        R acc = a.coeff(k);
        for (std::size_t j = 0; j < k; ++j) acc = acc - q[j] * b.coeff(k - j);
        q[k] = acc * inv0;
    }
    return Series<R>(std::move(q));
}

/// outer(inner) truncated at the common order; inner must have zero constant
/// term (otherwise the truncation would not be well defined).
template <class R>
Series<R> series_compose(const Series<R>& outer, const Series<R>& inner) {
    if (outer.order() != inner.order()) throw std::invalid_argument("Series: order mismatch");
    if (!(inner.coeff(0) == zero_like(inner.coeff(0))))
        throw std::domain_error("Series: composition requires inner(0) = 0");
    const std::size_t n = outer.order();
    Series<R> acc = Series<R>::zero(n, outer.coeff(0));
    for (std::size_t k = n + 1; k-- > 0;) {  // Horner
        acc = acc * inner;
        acc.coeff(0) = acc.coeff(0) + outer.coeff(k);
    }
    return acc;
}

/// Compositional inverse g with f(g(t)) = g(f(t)) = t to the common order.
/// f must have f(0) = 0 and a unit linear coefficient. Solves order by order:
/// the t^k coefficient of f(g) is linear in g_k with slope f_1.
template <class R>
Series<R> series_revert(const Series<R>& f) {
    const std::size_t n = f.order();
    if (!(f.coeff(0) == zero_like(f.coeff(0))))
        throw std::domain_error("Series: reversion requires zero constant term");
    if (n < 1 || !is_unit_elem(f.coeff(1)))
        throw std::domain_error("Series: reversion requires a unit linear coefficient");
    const R inv1 = invert_elem(f.coeff(1));
    Series<R> g = Series<R>::zero(n, f.coeff(0));
    g.coeff(1) = inv1;
    for (std::size_t k = 2; k <= n; ++k) {
        Series<R> h = series_compose(f, g);
        g.coeff(k) = g.coeff(k) - h.coeff(k) * inv1;
    }
    return g;
}

using RatSeries = Series<Rational>;
using PolySeries = Series<MultiPoly>;

}  // namespace polylip
