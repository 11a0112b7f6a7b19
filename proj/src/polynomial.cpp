#include "polylip/polynomial.hpp"

#include <sstream>

namespace polylip {

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    strip();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(-x);
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& s) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * s);
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v(c_.size() - 1, Rational(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Rational Polynomial::integral_01() const {
    Rational acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        acc += c_[i] / Rational(static_cast<long>(i + 1));
    return acc;
}

Rational Polynomial::moment(unsigned m) const {
    Rational acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        acc += c_[i] / Rational(static_cast<long>(i + m + 1));
    return acc;
}

Polynomial Polynomial::shifted(const Rational& a) const {
    // p(x+a) via binomial expansion of each monomial
    std::vector<Rational> v(c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational apow(1);
        for (std::size_t j = 0; j <= i; ++j) {
            // coefficient of x^{i-j}: C(i, j) a^j
            v[i - j] += c_[i] * Rational::binomial(i, j) * apow;
            apow *= a;
        }
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << '"' << c_[i].str() << '"';
    }
    os << ']';
    return os.str();
}

Polynomial Polynomial::from_json(const std::string& s) {
    std::vector<Rational> v;
    std::string cur;
    bool in_str = false;
    for (char ch : s) {
        if (ch == '"') {
            if (in_str) {
                v.push_back(Rational::from_string(cur));
                cur.clear();
            }
            in_str = !in_str;
        } else if (in_str) {
            cur.push_back(ch);
        }
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& a = c_[k];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << '-';
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        if (k == 0 || !mag.is_one()) os << mag.str();
        if (k > 0) {
            if (!mag.is_one()) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

}  // namespace polylip
