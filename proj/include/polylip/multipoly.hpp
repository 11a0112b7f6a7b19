#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polylip/rational.hpp"

namespace polylip {

/// Graded-lexicographic order on exponent vectors of equal arity: lower total
/// degree first, ties broken lexicographically. Fixed once so that serialized
/// term lists are reproducible byte for byte.
struct GradedLex {
    bool operator()(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
};

/// Sparse multivariate polynomial in c_1..c_m over Rational. Zero coefficients
/// are never stored; the arity m is fixed at construction.
class MultiPoly {
public:
    explicit MultiPoly(std::size_t arity) : arity_(arity) {}
    static MultiPoly constant(std::size_t arity, const Rational& c);
    /// The variable c_i (1-based index, i in 1..arity).
    static MultiPoly variable(std::size_t arity, std::size_t i);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    void add_term(const std::vector<std::uint32_t>& exps, const Rational& coeff);
    Rational coeff(const std::vector<std::uint32_t>& exps) const;
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& s) const;
    MultiPoly pow(unsigned e) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Substitute rational values for c_1..c_m; exact.
    Rational specialize(std::span<const Rational> values) const;

    /// Apply fn to every coefficient (dropping resulting zeros).
    MultiPoly map_coeffs(const std::function<Rational(const Rational&)>& fn) const;

    bool all_coeffs_integer() const;
    /// Minimum p-adic valuation over all coefficients; requires nonzero poly.
    long min_p_valuation(unsigned long p) const;

    const std::map<std::vector<std::uint32_t>, Rational, GradedLex>& terms() const { return terms_; }

    /// JSON list of {"exponents":[...],"coeff":"num/den"} in graded-lex order.
    std::string to_json() const;
    std::string str() const;  // e.g. "(-1/2)*c1^2 + (2/3)*c2"

private:
    std::size_t arity_;
    std::map<std::vector<std::uint32_t>, Rational, GradedLex> terms_;
};

}  // namespace polylip
