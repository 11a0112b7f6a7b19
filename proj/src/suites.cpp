#include "polylip/suites.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "polylip/appell.hpp"
#include "polylip/delta.hpp"
#include "polylip/formal_group.hpp"
#include "polylip/lipschitz.hpp"

namespace polylip {
namespace {

double parse_real_token(const std::string& t) {
    if (t.find('/') != std::string::npos) return Rational::from_string(t).to_double();
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("cannot parse number '" + t + "'");
    return v;
}

}  // namespace

Cplx parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    // Split into a real part and an optional "...i" imaginary part. The sign
    // that starts the imaginary term is the first +/- not at position 0 and
    // not following '/', 'e' or 'E'.
    const bool has_i = s.back() == 'i' || s.back() == 'I';
    if (!has_i) return Cplx(parse_real_token(s), 0.0);
    s.pop_back();  // drop the trailing i
    std::size_t split = std::string::npos;
    for (std::size_t idx = s.size(); idx-- > 1;) {
        const char c = s[idx];
        if ((c == '+' || c == '-') && s[idx - 1] != 'e' && s[idx - 1] != 'E' && s[idx - 1] != '/') {
            split = idx;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure imaginary: "i", "-i", "2i", "1/2i"
        if (s.empty() || s == "+") return Cplx(0.0, 1.0);
        if (s == "-") return Cplx(0.0, -1.0);
        return Cplx(0.0, parse_real_token(s));
    }
    const std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return Cplx(parse_real_token(re), parse_real_token(im));
}

std::vector<double> parse_axis(const std::string& s) {
    const auto c1 = s.find(':');
    const auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("axis spec must be start:stop:count, got '" + s + "'");
    const double a = parse_real_token(s.substr(0, c1));
    const double b = parse_real_token(s.substr(c1 + 1, c2 - c1 - 1));
    const long count = std::stol(s.substr(c2 + 1));
    if (count < 1) throw std::invalid_argument("axis count must be >= 1");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i)
        v.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / (count - 1));
    return v;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned nthreads = std::min<std::size_t>(jobs, count);
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

SuiteResult run_inversion_suite(const InversionConfig& cfg) {
    if (cfg.radii < 1 || cfg.rays < 1 || cfg.ns.empty())
        throw std::invalid_argument("inversion suite: grid must be non-empty");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("inversion suite: tolerance must be positive");
    struct Task {
        int n;
        Cplx q;
    };
    std::vector<Task> tasks;
    for (int n : cfg.ns)
        for (int i = 0; i < cfg.radii; ++i)
            for (int j = 0; j < cfg.rays; ++j) {
                const double r =
                    cfg.radii == 1 ? cfg.r0 : cfg.r0 + (cfg.r1 - cfg.r0) * i / (cfg.radii - 1.0);
                const double th = 2.0 * M_PI * (j + 0.5) / cfg.rays;
                tasks.push_back({n, Cplx(r * std::cos(th), r * std::sin(th))});
            }
    SuiteResult out;
    out.reports.resize(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
        const double d = inversion_defect(tasks[i].n, tasks[i].q);
        out.reports[i] = DefectReport::make("inversion", tasks[i].n, tasks[i].q, 0, Cplx(d, 0.0),
                                            Cplx(0.0, 0.0), 0.0);
    });
    for (const auto& r : out.reports)
        if (!(r.abs_defect < cfg.tol)) out.all_pass = false;
    return out;
}

SuiteResult run_lipschitz_suite(const LipschitzConfig& cfg) {
    if (cfg.labels.empty() || cfg.ns.empty() || cfg.taus.empty())
        throw std::invalid_argument("lipschitz suite: grid must be non-empty");
    if (cfg.K < 1) throw std::invalid_argument("lipschitz suite: K must be >= 1");
    DescriptorRegistry reg = DescriptorRegistry::with_builtins();
    struct Task {
        const AppellDescriptor* d;
        int n;
        Cplx tau;
    };
    std::vector<Task> tasks;
    for (const auto& label : cfg.labels) {
        const AppellDescriptor& d = reg.get(label);  // unknown labels rejected up front
        for (int n : cfg.ns)
            for (Cplx tau : cfg.taus) {
                tasks.push_back({&d, n, tau});
                if (cfg.conjugates) tasks.push_back({&d, n, std::conj(tau)});
            }
    }
    SuiteResult out;
    out.reports.resize(tasks.size());
    if (cfg.rate_check) out.rate_checks.resize(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
        const auto rf = RepresentingFunction::for_descriptor(*tasks[i].d, tasks[i].n);
        DefectReport at_k = lipschitz_defect(rf, tasks[i].tau, cfg.K);
        out.reports[i] = at_k;
        if (cfg.rate_check) {
            DefectReport at_2k = lipschitz_defect(rf, tasks[i].tau, 2 * cfg.K);
            RateCheck rc;
            rc.at_k = at_k;
            rc.at_2k = at_2k;
            rc.ratio = at_2k.abs_defect > 0.0 ? at_k.abs_defect / at_2k.abs_defect
                                              : std::numeric_limits<double>::infinity();
            rc.pass = rc.ratio >= cfg.min_ratio || at_2k.abs_defect <= cfg.rate_floor;
            out.rate_checks[i] = rc;
        }
    });
    for (const auto& r : out.reports)
        if (!(r.abs_defect < cfg.tol)) out.all_pass = false;
    for (const auto& rc : out.rate_checks)
        if (!rc.pass) out.all_pass = false;
    return out;
}

SuiteResult run_classical_lipschitz_suite(const ClassicalLipschitzConfig& cfg) {
    if (cfg.ks.empty() || cfg.zs.empty())
        throw std::invalid_argument("classical-lipschitz suite: grid must be non-empty");
    struct Task {
        int k;
        Cplx z;
    };
    std::vector<Task> tasks;
    for (int k : cfg.ks)
        for (Cplx z : cfg.zs) tasks.push_back({k, z});
    SuiteResult out;
    out.reports.resize(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
        out.reports[i] = classical_lipschitz_check(tasks[i].k, tasks[i].z, 0, cfg.rel_tol);
    });
    for (const auto& r : out.reports)
        if (!(r.rel_defect < cfg.rel_tol)) out.all_pass = false;
    return out;
}

SuiteResult run_boundary_suite(const BoundaryConfig& cfg) {
    if (cfg.ns.empty() || cfg.xs.empty())
        throw std::invalid_argument("boundary suite: grid must be non-empty");
    struct Task {
        int n;
        double x;
    };
    std::vector<Task> tasks;
    for (int n : cfg.ns)
        for (double x : cfg.xs) tasks.push_back({n, x});
    SuiteResult out;
    out.reports.resize(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
        out.reports[i] = boundary_value_check(tasks[i].n, tasks[i].x, cfg.eps);
    });
    for (const auto& r : out.reports)
        if (!(r.abs_defect < cfg.tol)) out.all_pass = false;
    return out;
}

SuiteResult run_pairing_suite(const PairingConfig& cfg) {
    DescriptorRegistry reg = DescriptorRegistry::with_builtins();
    const AppellDescriptor& bern = reg.get("bernoulli");
    SuiteResult out;
    std::vector<int> ns{-1, 0};
    for (int n = 1; n <= cfg.max_n; ++n) ns.push_back(n);
    for (int n : ns) {
        const auto rf = RepresentingFunction::for_descriptor(bern, n);
        for (int m = 0; m <= cfg.max_m; ++m) {
            const Polynomial psi = Polynomial::monomial(Rational(1), static_cast<std::size_t>(m));
            const Cplx got = contour_pairing(rf, psi, cfg.margin_a, 1e-13);
            const Cplx want(pairing_expected(rf, psi).to_double(), 0.0);
            out.reports.push_back(
                DefectReport::make("pairing", n, Cplx(static_cast<double>(m), 0.0), 0, got, want, 0.0));
            const Cplx other = contour_pairing(rf, psi, cfg.margin_b, 1e-13);
            const bool indep = std::abs(other - got) < cfg.independence_tol;
            out.checks.emplace_back(
                "contour-independence n=" + std::to_string(n) + " m=" + std::to_string(m), indep);
        }
    }
    for (const auto& r : out.reports)
        if (!(r.abs_defect < cfg.tol)) out.all_pass = false;
    for (const auto& [name, ok] : out.checks)
        if (!ok) out.all_pass = false;
    return out;
}

SuiteResult run_congruence_suite(const CongruenceConfig& cfg) {
    SuiteResult out;
    for (int n = 2; n <= cfg.max_n; ++n) out.verdicts.push_back(von_staudt_check(n));
    for (int p : cfg.kummer_ps)
        for (int n = 2; n + p - 1 <= cfg.max_n; ++n) out.verdicts.push_back(kummer_check(n, p));
    for (int n = 2; n <= cfg.cvs_max; n += 2) out.verdicts.push_back(classical_cvs_check(n));

    // Specialization c_i = (-1)^i must reproduce the classical numbers exactly.
    {
        const int top = std::min(cfg.specialize_max, 20);
        const UniversalBernoulli ub = universal_bernoulli(top);
        const auto spec = classical_specialization(ub.numbers.front().arity());
        const auto classical = bernoulli_numbers(top);
        bool ok = true;
        for (int n = 0; n <= top; ++n)
            if (ub.numbers[static_cast<std::size_t>(n)].specialize(spec) !=
                classical[static_cast<std::size_t>(n)])
                ok = false;
        out.checks.emplace_back("specialization c_i=(-1)^i reproduces B_n", ok);
    }
    for (const auto& v : out.verdicts)
        if (v.applicable && !v.holds) out.all_pass = false;
    for (const auto& [name, ok] : out.checks)
        if (!ok) out.all_pass = false;
    return out;
}

}  // namespace polylip
