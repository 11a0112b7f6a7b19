#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "polylip/polynomial.hpp"
#include "polylip/series.hpp"

namespace polylip {

/// Appell sequences generated by t e^{xt} / ((e^t - 1) g(t)) for an analytic
/// g with g(0) = 1. The descriptor carries g as an exact truncated series.
struct AppellDescriptor {
    std::string label;
    RatSeries g;     // order >= max_degree + 1, g(0) = 1 exactly
    int max_degree;

    AppellDescriptor(std::string label_, RatSeries g_, int max_degree_);

    static AppellDescriptor bernoulli(int max_degree);  // g = 1
    static AppellDescriptor a_seq(int max_degree);      // g = sin(t)/t
    static AppellDescriptor b_seq(int max_degree);      // g = cos(t)
};

/// Which boundary jumps vanish. Determined from the computed values, never
/// from the parity of g (the two do not always agree in the source material).
enum class ParityClass { even_vanishing, odd_vanishing, neither };

std::string parity_name(ParityClass pc);

struct PhiVector {
    std::vector<Rational> values;  // values[j-1] = phi_j = A_j(1) - A_j(0), j = 1..n
    ParityClass parity;

    Rational phi(std::size_t j) const { return j >= 1 && j <= values.size() ? values[j - 1] : Rational(0); }
};

/// B_0..B_N via series division of t by (e^t - 1); exact, cached.
std::vector<Rational> bernoulli_numbers(int N);
Polynomial bernoulli_poly(int n);

/// A_0..A_N evaluated at 0 (with the n! normalization of the generating
/// function), from t / ((e^t - 1) g(t)).
std::vector<Rational> appell_numbers(const AppellDescriptor& d, int N);
Polynomial appell_poly(const AppellDescriptor& d, int n);

/// Exact integral of A_n over [0,1] -- the c_0 of the Fourier expansion.
Rational appell_c0(const AppellDescriptor& d, int n);

/// phi_j computed both as A_j(1) - A_j(0) and as j! [t^j] (t/g(t)); the two
/// routes are cross-checked and disagreement is a hard error.
PhiVector phi_vector(const AppellDescriptor& d, int n);

/// One term coeff * (2 pi i k)^power of the closed-form Fourier coefficient.
struct FourierTerm {
    int power;       // j - (n+1), always negative
    Rational coeff;  // -n! phi_j / j!
};

struct FourierCoefficient {
    int n;
    long k;  // nonzero
    std::complex<double> value;
    std::vector<FourierTerm> terms;
};

/// Closed form c_k = -n! sum_j (phi_j / j!) (2 pi i k)^{-(n+1-j)} for k != 0.
/// The k = 0 coefficient is appell_c0.
FourierCoefficient fourier_coefficient(const AppellDescriptor& d, int n, long k);

/// The unique polynomial R with p(tau) log(1 - 1/tau) + R(tau) -> 0 at
/// infinity, computed exactly from the expansion log(1-1/tau) = -sum tau^-k/k.
Polynomial r_poly(const Polynomial& p);

/// Named descriptors; built-ins plus optional JSON registry files with
/// entries {label, g_coefficients, max_degree}.
class DescriptorRegistry {
public:
    static DescriptorRegistry with_builtins(int max_degree = 24);
    void load_file(const std::string& path);
    void add(AppellDescriptor d);
    const AppellDescriptor& get(const std::string& label) const;  // throws on unknown label
    bool contains(const std::string& label) const;
    std::vector<std::string> labels() const;  // sorted

private:
    std::map<std::string, AppellDescriptor> by_label_;
};

}  // namespace polylip
