#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polylip/rational.hpp"

namespace polylip {

/// Dense univariate polynomial over Rational, coefficients stored by
/// ascending degree. The zero polynomial has an empty coefficient list;
/// otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational eval(const Rational& x) const;                      // Horner, exact
    std::complex<double> eval(std::complex<double> x) const;     // Horner, doubles

    Polynomial derivative() const;
    Rational integral_01() const;              // exact \int_0^1 p
    Rational moment(unsigned m) const;         // exact \int_0^1 x^m p(x) dx
    Polynomial shifted(const Rational& a) const;  // p(x + a)

    /// JSON array of "num/den" strings, ascending degree; "[]" for zero.
    std::string to_json() const;
    static Polynomial from_json(const std::string& json_array);

    /// Human-readable form like "x^2 - x + 1/6" in the given variable.
    std::string str(const std::string& var = "x") const;

private:
    void strip();
    std::vector<Rational> c_;
};

}  // namespace polylip
