#include "polylip/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polylip {

bool GradedLex::operator()(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
    MultiPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(std::vector<std::uint32_t>(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t i) {
    if (i < 1 || i > arity) throw std::invalid_argument("MultiPoly: variable index out of range");
    MultiPoly p(arity);
    std::vector<std::uint32_t> e(arity, 0);
    e[i - 1] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    for (auto x : e)
        if (x) return false;
    return true;
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(std::vector<std::uint32_t>(arity_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const std::vector<std::uint32_t>& exps, const Rational& coeff) {
    if (exps.size() != arity_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const std::vector<std::uint32_t>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r(a.arity_);
    std::vector<std::uint32_t> e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly r(arity_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(arity_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational MultiPoly::specialize(std::span<const Rational> values) const {
    if (values.size() != arity_) throw std::invalid_argument("MultiPoly: specialization arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < arity_; ++i)
            if (e[i]) term *= values[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::map_coeffs(const std::function<Rational(const Rational&)>& fn) const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
}

bool MultiPoly::all_coeffs_integer() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

long MultiPoly::min_p_valuation(unsigned long p) const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: valuation of zero polynomial");
    bool first = true;
    long best = 0;
    for (const auto& [e, c] : terms_) {
        long v = c.p_valuation(p);
        if (first || v < best) best = v;
        first = false;
    }
    return best;
}

std::string MultiPoly::to_json() const {
    std::ostringstream os;
    os << '[';
    bool sep = false;
    for (const auto& [e, c] : terms_) {
        if (sep) os << ',';
        sep = true;
        os << "{\"exponents\":[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        os << "],\"coeff\":\"" << c.str() << "\"}";
    }
    os << ']';
    return os.str();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool sep = false;
    for (const auto& [e, c] : terms_) {
        if (sep) os << " + ";
        sep = true;
        os << '(' << c.str() << ')';
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            os << "*c" << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

}  // namespace polylip
