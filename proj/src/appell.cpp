#include "polylip/appell.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polylip {
namespace {

// (e^t - 1)/t = sum t^k / (k+1)!, unit constant term.
RatSeries expm1_over_t(std::size_t order) {
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t k = 0; k <= order; ++k) c[k] = Rational::factorial(k + 1).inverse();
    return RatSeries(std::move(c));
}

RatSeries one_series(std::size_t order) {
    std::vector<Rational> c(order + 1, Rational(0));
    c[0] = Rational(1);
    return RatSeries(std::move(c));
}

// Generating numbers n! [t^n] of 1/(((e^t-1)/t) g(t)) = t/((e^t-1) g(t)).
std::vector<Rational> generating_numbers(const RatSeries& g, int N) {
    const std::size_t order = static_cast<std::size_t>(N);
    std::vector<Rational> den_c(order + 1, Rational(0));
    {
        RatSeries h = expm1_over_t(order);
        for (std::size_t k = 0; k <= order; ++k) {
            Rational acc(0);
            for (std::size_t j = 0; j <= k; ++j) acc += h.coeff(j) * (k - j <= g.order() ? g.coeff(k - j) : Rational(0));
            den_c[k] = acc;
        }
    }
    RatSeries series = series_div(one_series(order), RatSeries(std::move(den_c)));
    std::vector<Rational> out(order + 1);
    Rational fact(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) fact *= Rational(static_cast<long>(n));
        out[n] = series.coeff(n) * fact;
    }
    return out;
}

Polynomial binomial_convolution(const std::vector<Rational>& numbers, int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        c[n - k] = Rational::binomial(n, k) * numbers[static_cast<std::size_t>(k)];
    return Polynomial(std::move(c));
}

}  // namespace

AppellDescriptor::AppellDescriptor(std::string label_, RatSeries g_, int max_degree_)
    : label(std::move(label_)), g(std::move(g_)), max_degree(max_degree_) {
    if (max_degree < 0) throw std::invalid_argument("AppellDescriptor: negative max_degree");
    if (!g.coeff(0).is_one())
        throw std::invalid_argument("AppellDescriptor '" + label + "': g(0) must be 1");
    if (g.order() < static_cast<std::size_t>(max_degree) + 1)
        throw std::invalid_argument("AppellDescriptor '" + label + "': series order below max_degree + 1");
}

AppellDescriptor AppellDescriptor::bernoulli(int max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 2, Rational(0));
    c[0] = Rational(1);
    return AppellDescriptor("bernoulli", RatSeries(std::move(c)), max_degree);
}

AppellDescriptor AppellDescriptor::a_seq(int max_degree) {
    // sin(t)/t = sum (-1)^m t^{2m} / (2m+1)!
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 2, Rational(0));
    for (std::size_t m = 0; 2 * m < c.size(); ++m) {
        Rational v = Rational::factorial(2 * m + 1).inverse();
        c[2 * m] = (m % 2 == 0) ? v : -v;
    }
    return AppellDescriptor("a-seq", RatSeries(std::move(c)), max_degree);
}

AppellDescriptor AppellDescriptor::b_seq(int max_degree) {
    // cos(t) = sum (-1)^m t^{2m} / (2m)!
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 2, Rational(0));
    for (std::size_t m = 0; 2 * m < c.size(); ++m) {
        Rational v = Rational::factorial(2 * m).inverse();
        c[2 * m] = (m % 2 == 0) ? v : -v;
    }
    return AppellDescriptor("b-seq", RatSeries(std::move(c)), max_degree);
}

std::string parity_name(ParityClass pc) {
    switch (pc) {
        case ParityClass::even_vanishing: return "even-vanishing";
        case ParityClass::odd_vanishing: return "odd-vanishing";
        default: return "neither";
    }
}

std::vector<Rational> bernoulli_numbers(int N) {
    if (N < 0) throw std::invalid_argument("bernoulli_numbers: N must be >= 0");
    static std::mutex mu;
    static std::vector<Rational> cache;  // grown monotonically
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<std::size_t>(N) >= cache.size()) {
        RatSeries series = series_div(one_series(static_cast<std::size_t>(N)),
                                      expm1_over_t(static_cast<std::size_t>(N)));
        cache.resize(static_cast<std::size_t>(N) + 1);
        Rational fact(1);
        for (int n = 0; n <= N; ++n) {
            if (n > 0) fact *= Rational(n);
            cache[static_cast<std::size_t>(n)] = series.coeff(static_cast<std::size_t>(n)) * fact;
        }
    }
    return std::vector<Rational>(cache.begin(), cache.begin() + N + 1);
}

Polynomial bernoulli_poly(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_poly: n must be >= 0");
    return binomial_convolution(bernoulli_numbers(n), n);
}

std::vector<Rational> appell_numbers(const AppellDescriptor& d, int N) {
    if (N < 0 || N > d.max_degree)
        throw std::invalid_argument("appell_numbers: order exceeds descriptor max_degree");
    return generating_numbers(d.g, N);
}

Polynomial appell_poly(const AppellDescriptor& d, int n) {
    if (n < 0 || n > d.max_degree)
        throw std::invalid_argument("appell_poly: order exceeds descriptor max_degree");
    return binomial_convolution(appell_numbers(d, n), n);
}

Rational appell_c0(const AppellDescriptor& d, int n) { return appell_poly(d, n).integral_01(); }

PhiVector phi_vector(const AppellDescriptor& d, int n) {
    if (n < 0 || n > d.max_degree)
        throw std::invalid_argument("phi_vector: order exceeds descriptor max_degree");
    PhiVector out;
    out.values.reserve(static_cast<std::size_t>(n));

    // Route 1: phi_j = A_j(1) - A_j(0).
    const std::vector<Rational> numbers = appell_numbers(d, n);
    for (int j = 1; j <= n; ++j) {
        Polynomial aj = binomial_convolution(numbers, j);
        out.values.push_back(aj.eval(Rational(1)) - aj.eval(Rational(0)));
    }

    // Route 2: phi_j = j! [t^j] (t / g(t));  the generating identity
    // sum phi_j t^j / j! = t/g(t) follows from the generating function
    // evaluated at x = 1 minus x = 0.
    {
        RatSeries inv_g = series_div(one_series(d.g.order()), d.g);
        Rational fact(1);
        for (int j = 1; j <= n; ++j) {
            fact *= Rational(j);
            Rational other = inv_g.coeff(static_cast<std::size_t>(j) - 1) * fact;
            if (other != out.values[static_cast<std::size_t>(j) - 1])
                throw std::logic_error("phi_vector: the two computations of phi_" +
                                       std::to_string(j) + " disagree for '" + d.label + "'");
        }
    }

    bool even_ok = true, odd_ok = true;
    for (int j = 1; j <= n; ++j) {
        const bool zero = out.values[static_cast<std::size_t>(j) - 1].is_zero();
        if (j % 2 == 0 && !zero) even_ok = false;
        if (j % 2 == 1 && !zero) odd_ok = false;
    }
    out.parity = even_ok   ? ParityClass::even_vanishing
                 : odd_ok ? ParityClass::odd_vanishing
                          : ParityClass::neither;
    return out;
}

FourierCoefficient fourier_coefficient(const AppellDescriptor& d, int n, long k) {
    if (n < 1) throw std::invalid_argument("fourier_coefficient: n must be >= 1");
    if (k == 0)
        throw std::invalid_argument("fourier_coefficient: k = 0 is the exact c0 (appell_c0)");
    FourierCoefficient out;
    out.n = n;
    out.k = k;
    const PhiVector phi = phi_vector(d, n);
    const Rational minus_nfact = -Rational::factorial(static_cast<unsigned long>(n));
    std::complex<double> acc(0.0, 0.0);
    const std::complex<double> base(0.0, 2.0 * M_PI * static_cast<double>(k));
    for (int j = 1; j <= n; ++j) {
        const Rational& pj = phi.values[static_cast<std::size_t>(j) - 1];
        if (pj.is_zero()) continue;
        FourierTerm term;
        term.power = j - (n + 1);
        term.coeff = minus_nfact * pj / Rational::factorial(static_cast<unsigned long>(j));
        std::complex<double> p(1.0, 0.0);
        for (int e = 0; e < n + 1 - j; ++e) p *= base;
        acc += term.coeff.to_double() / p;
        out.terms.push_back(std::move(term));
    }
    out.value = acc;
    return out;
}

Polynomial r_poly(const Polynomial& p) {
    if (p.degree() <= 0) return Polynomial();
    const std::size_t deg = static_cast<std::size_t>(p.degree());
    std::vector<Rational> c(deg, Rational(0));
    // [tau^m] of p(tau) log(1 - 1/tau) is -sum_{j>m} p_j/(j-m); negate it.
    for (std::size_t m = 0; m < deg; ++m) {
        Rational acc(0);
        for (std::size_t j = m + 1; j <= deg; ++j)
            acc += p.coeff(j) / Rational(static_cast<long>(j - m));
        c[m] = acc;
    }
    return Polynomial(std::move(c));
}

DescriptorRegistry DescriptorRegistry::with_builtins(int max_degree) {
    DescriptorRegistry reg;
    reg.add(AppellDescriptor::bernoulli(max_degree));
    reg.add(AppellDescriptor::a_seq(max_degree));
    reg.add(AppellDescriptor::b_seq(max_degree));
    return reg;
}

void DescriptorRegistry::add(AppellDescriptor d) {
    auto label = d.label;
    by_label_.insert_or_assign(std::move(label), std::move(d));
}

void DescriptorRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("DescriptorRegistry: cannot open '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);
    const nlohmann::json& list = doc.is_array() ? doc : doc.at("descriptors");
    for (const auto& entry : list) {
        const std::string label = entry.at("label").get<std::string>();
        const int max_degree = entry.at("max_degree").get<int>();
        std::vector<Rational> c;
        for (const auto& s : entry.at("g_coefficients"))
            c.push_back(Rational::from_string(s.get<std::string>()));
        // Pad to the order the descriptor contract requires (g analytic, the
        // omitted tail coefficients are zero by convention of the file format).
        if (c.size() < static_cast<std::size_t>(max_degree) + 2)
            c.resize(static_cast<std::size_t>(max_degree) + 2, Rational(0));
        add(AppellDescriptor(label, RatSeries(std::move(c)), max_degree));
    }
}

const AppellDescriptor& DescriptorRegistry::get(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end())
        throw std::invalid_argument("unknown descriptor label '" + label + "'");
    return it->second;
}

bool DescriptorRegistry::contains(const std::string& label) const {
    return by_label_.count(label) != 0;
}

std::vector<std::string> DescriptorRegistry::labels() const {
    std::vector<std::string> out;
    out.reserve(by_label_.size());
    for (const auto& [k, v] : by_label_) out.push_back(k);
    return out;
}

}  // namespace polylip
