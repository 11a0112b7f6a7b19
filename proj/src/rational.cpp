#include "polylip/rational.hpp"

namespace polylip {

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::pow(unsigned long e) const {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), v_.get_num_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), v_.get_den_mpz_t(), e);
    return Rational(std::move(r));  // already canonical: gcd(a,b)=1 => gcd(a^e,b^e)=1
}

long Rational::p_valuation(unsigned long p) const {
    if (is_zero()) throw std::domain_error("Rational: valuation of zero");
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), v_.get_num_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), v_.get_den_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

Rational Rational::fractional_part() const {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(v_ - fl));
}

Rational Rational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace polylip
