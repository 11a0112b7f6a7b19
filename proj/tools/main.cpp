// polylip: polylogarithmic delta functions, Appell sequences and Lipschitz
// summation identities, with machine-readable verification reports.
//
// Subcommands:
//   appell        polynomials, boundary jumps, parity and R_n tables
//   eval          delta / extended-delta values over complex grids
//   verify        identity suites, exit 0 only if everything passes
//   formal-group  Lazard-universal series and universal Bernoulli numbers

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polylip/appell.hpp"
#include "polylip/delta.hpp"
#include "polylip/formal_group.hpp"
#include "polylip/lipschitz.hpp"
#include "polylip/report.hpp"
#include "polylip/suites.hpp"

namespace {

using namespace polylip;

constexpr int kExitOk = 0;
constexpr int kExitFailedIdentity = 1;
constexpr int kExitConfigError = 2;

struct OutputSink {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
        f << text;
    }
};

// Tolerance resolution: explicit --tol wins, then POLYLIP_TOL, then the
// suite's own canonical tolerance.
double resolve_tol(bool flag_given, double flag_value, double suite_default) {
    if (flag_given) return flag_value;
    if (const char* v = std::getenv("POLYLIP_TOL")) {
        try {
            return std::stod(v);
        } catch (...) {
            throw std::invalid_argument("POLYLIP_TOL is not a number");
        }
    }
    return suite_default;
}

DescriptorRegistry load_registry(const std::string& registry_path, int max_degree) {
    DescriptorRegistry reg = DescriptorRegistry::with_builtins(max_degree);
    if (!registry_path.empty()) reg.load_file(registry_path);
    return reg;
}

// ---------------------------------------------------------------- appell ---

int cmd_appell(const std::string& desc, int max_n, const std::string& emit,
               const std::string& format, const OutputSink& out, const std::string& registry) {
    DescriptorRegistry reg = load_registry(registry, std::max(max_n + 1, 24));
    const AppellDescriptor& d = reg.get(desc);
    if (max_n < 0 || max_n > d.max_degree)
        throw std::invalid_argument("--max out of range for descriptor");

    const bool want_polys = emit == "all" || emit == "polys";
    const bool want_phi = emit == "all" || emit == "phi";
    const bool want_r = emit == "all" || emit == "r-poly";

    std::vector<Polynomial> polys;
    for (int n = 0; n <= max_n; ++n) polys.push_back(appell_poly(d, n));
    PhiVector phi = phi_vector(d, max_n);
    std::vector<Polynomial> rpolys;
    for (int n = 1; n <= max_n; ++n) {
        Polynomial p = polys[static_cast<std::size_t>(n)];
        rpolys.push_back(r_poly(p - Polynomial::constant(p.integral_01())));
    }

    std::ostringstream os;
    if (format == "json") {
        os << "{\"descriptor\":\"" << d.label << "\",\"max\":" << max_n;
        if (want_polys) {
            os << ",\"polynomials\":[";
            for (int n = 0; n <= max_n; ++n)
                os << (n ? "," : "") << polys[static_cast<std::size_t>(n)].to_json();
            os << "]";
        }
        if (want_phi) {
            os << ",\"phi\":[";
            for (std::size_t j = 0; j < phi.values.size(); ++j)
                os << (j ? "," : "") << '"' << phi.values[j].str() << '"';
            os << "],\"parity\":\"" << parity_name(phi.parity) << "\"";
        }
        if (want_r) {
            os << ",\"r_polynomials\":[";
            for (std::size_t i = 0; i < rpolys.size(); ++i) os << (i ? "," : "") << rpolys[i].to_json();
            os << "]";
        }
        os << "}\n";
    } else if (format == "csv") {
        os << "kind,n,coefficients\n";
        if (want_polys)
            for (int n = 0; n <= max_n; ++n)
                os << "A," << n << ",\"" << polys[static_cast<std::size_t>(n)].to_json() << "\"\n";
        if (want_phi)
            for (std::size_t j = 0; j < phi.values.size(); ++j)
                os << "phi," << (j + 1) << ",\"" << phi.values[j].str() << "\"\n";
        if (want_r)
            for (std::size_t i = 0; i < rpolys.size(); ++i)
                os << "R," << (i + 1) << ",\"" << rpolys[i].to_json() << "\"\n";
    } else {
        os << "descriptor " << d.label << " (parity " << parity_name(phi.parity) << ")\n";
        if (want_polys)
            for (int n = 0; n <= max_n; ++n)
                os << "A_" << n << "(x) = " << polys[static_cast<std::size_t>(n)].str() << "\n";
        if (want_phi)
            for (std::size_t j = 0; j < phi.values.size(); ++j)
                os << "phi_" << (j + 1) << " = " << phi.values[j].str() << "\n";
        if (want_r)
            for (std::size_t i = 0; i < rpolys.size(); ++i)
                os << "R_" << (i + 1) << "(tau) = " << rpolys[i].str("tau") << "\n";
    }
    out.write(os.str());
    return kExitOk;
}

// ------------------------------------------------------------------ eval ---

int cmd_eval(const std::string& fn, int n, const std::vector<std::string>& q_literals,
             const std::string& grid, const std::string& desc, const std::string& sign_case,
             const std::string& format, const OutputSink& out, const std::string& registry) {
    std::vector<Cplx> points;
    for (const auto& s : q_literals) points.push_back(parse_complex(s));
    if (!grid.empty()) {
        const auto comma = grid.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--grid must be re0:re1:n,im0:im1:m");
        for (double re : parse_axis(grid.substr(0, comma)))
            for (double im : parse_axis(grid.substr(comma + 1))) points.emplace_back(re, im);
    }
    if (points.empty()) throw std::invalid_argument("eval: no points (use --q or --grid)");

    ExtendedDeltaSpec spec{{}, n, SignCase::p_case};
    if (fn == "extended") {
        DescriptorRegistry reg = load_registry(registry, 24);
        const AppellDescriptor& d = reg.get(desc);
        spec.phi = phi_vector(d, std::min(std::max(-n, 1), d.max_degree));
        spec.sign_case = sign_case == "q" ? SignCase::q_case : SignCase::p_case;
    } else if (fn != "delta") {
        throw std::invalid_argument("--fn must be delta or extended");
    }

    struct Row {
        Cplx q;
        bool ok;
        EvalResult res;
        std::string error;
    };
    std::vector<Row> rows;
    for (Cplx q : points) {
        Row row;
        row.q = q;
        try {
            row.res = fn == "delta" ? delta_eval(n, q) : extended_delta_eval(spec, q);
            row.ok = true;
        } catch (const std::domain_error& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }

    std::ostringstream os;
    if (format == "json") {
        for (const auto& r : rows) {
            os << "{\"fn\":\"" << fn << "\",\"n\":" << n << ",\"re_q\":" << fmt_double(r.q.real())
               << ",\"im_q\":" << fmt_double(r.q.imag());
            if (r.ok)
                os << ",\"re\":" << fmt_double(r.res.value.real())
                   << ",\"im\":" << fmt_double(r.res.value.imag()) << ",\"K\":" << r.res.truncation
                   << ",\"tail_bound\":" << fmt_double(r.res.tail_bound) << ",\"method\":\""
                   << method_name(r.res.method) << "\"";
            else
                os << ",\"error\":\"" << r.error << "\"";
            os << "}\n";
        }
    } else if (format == "csv") {
        os << "fn,n,re_q,im_q,re,im,K,tail_bound,method,error\n";
        for (const auto& r : rows) {
            os << fn << ',' << n << ',' << fmt_double(r.q.real()) << ',' << fmt_double(r.q.imag())
               << ',';
            if (r.ok)
                os << fmt_double(r.res.value.real()) << ',' << fmt_double(r.res.value.imag()) << ','
                   << r.res.truncation << ',' << fmt_double(r.res.tail_bound) << ','
                   << method_name(r.res.method) << ',';
            else
                os << ",,,,," << r.error;
            os << "\n";
        }
    } else {
        for (const auto& r : rows) {
            os << fn << "_" << n << "(" << fmt_complex(r.q) << ") = ";
            if (r.ok)
                os << fmt_complex(r.res.value) << "   [" << method_name(r.res.method)
                   << ", K=" << r.res.truncation << ", tail<=" << fmt_double(r.res.tail_bound)
                   << "]\n";
            else
                os << "error: " << r.error << "\n";
        }
    }
    out.write(os.str());
    return kExitOk;
}

// ---------------------------------------------------------------- verify ---

void append_suite(std::ostringstream& text, const SuiteResult& res, const std::string& format) {
    if (format == "csv") {
        for (const auto& r : res.reports) text << defect_csv_row(r) << "\n";
        for (const auto& rc : res.rate_checks)
            text << defect_csv_row(rc.at_2k) << "\n";
        for (const auto& v : res.verdicts) text << verdict_json(v) << "\n";
    } else if (format == "json") {
        for (const auto& r : res.reports) text << defect_json_line(r) << "\n";
        for (const auto& rc : res.rate_checks) {
            text << "{\"rate_check\":{\"at_K\":" << defect_json_line(rc.at_k)
                 << ",\"at_2K\":" << defect_json_line(rc.at_2k)
                 << ",\"ratio\":" << fmt_double(rc.ratio) << ",\"pass\":" << (rc.pass ? "true" : "false")
                 << "}}\n";
        }
        for (const auto& v : res.verdicts) text << verdict_json(v) << "\n";
        for (const auto& [name, ok] : res.checks)
            text << "{\"check\":\"" << name << "\",\"pass\":" << (ok ? "true" : "false") << "}\n";
    } else {
        for (const auto& r : res.reports) text << defect_pretty(r) << "\n";
        for (const auto& rc : res.rate_checks)
            text << "rate " << rc.at_k.identity << " n=" << rc.at_k.n
                 << " ratio=" << fmt_double(rc.ratio) << (rc.pass ? " ok" : " FAIL") << "\n";
        for (const auto& v : res.verdicts) text << verdict_pretty(v) << "\n";
        for (const auto& [name, ok] : res.checks) text << name << (ok ? " ok" : " FAIL") << "\n";
    }
}

int cmd_verify(const std::string& suite, bool tol_given, double tol, long K, int max_n,
               const std::string& radii, int rays, const std::vector<std::string>& z_literals,
               const std::vector<std::string>& tau_literals, const std::string& k_range,
               const std::vector<std::string>& labels, unsigned jobs, const std::string& format,
               const OutputSink& out) {
    if (tol_given && !(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    std::ostringstream text;
    bool all_pass = true;
    auto run = [&](const std::string& name) {
        SuiteResult res;
        if (name == "inversion") {
            InversionConfig cfg;
            cfg.tol = resolve_tol(tol_given, tol, cfg.tol);
            cfg.jobs = jobs;
            if (!radii.empty()) {
                auto axis = parse_axis(radii);
                cfg.r0 = axis.front();
                cfg.r1 = axis.back();
                cfg.radii = static_cast<int>(axis.size());
            }
            if (rays > 0) cfg.rays = rays;
            res = run_inversion_suite(cfg);
        } else if (name == "lipschitz") {
            LipschitzConfig cfg;
            cfg.tol = resolve_tol(tol_given, tol, cfg.tol);
            cfg.jobs = jobs;
            if (K > 0) cfg.K = K;
            if (!labels.empty()) cfg.labels = labels;
            if (!tau_literals.empty()) {
                cfg.taus.clear();
                for (const auto& s : tau_literals) cfg.taus.push_back(parse_complex(s));
            }
            res = run_lipschitz_suite(cfg);
        } else if (name == "classical-lipschitz") {
            ClassicalLipschitzConfig cfg;
            cfg.rel_tol = resolve_tol(tol_given, tol, cfg.rel_tol);
            cfg.jobs = jobs;
            if (!k_range.empty()) {
                const auto dots = k_range.find("..");
                if (dots == std::string::npos)
                    throw std::invalid_argument("--k must be lo..hi");
                cfg.ks.clear();
                for (int k = std::stoi(k_range.substr(0, dots)); k <= std::stoi(k_range.substr(dots + 2)); ++k)
                    cfg.ks.push_back(k);
            }
            if (!z_literals.empty()) {
                cfg.zs.clear();
                for (const auto& s : z_literals) cfg.zs.push_back(parse_complex(s));
            }
            res = run_classical_lipschitz_suite(cfg);
        } else if (name == "boundary") {
            BoundaryConfig cfg;
            cfg.tol = resolve_tol(tol_given, tol, cfg.tol);
            cfg.jobs = jobs;
            res = run_boundary_suite(cfg);
        } else if (name == "pairing") {
            PairingConfig cfg;
            cfg.tol = resolve_tol(tol_given, tol, cfg.tol);
            cfg.jobs = jobs;
            res = run_pairing_suite(cfg);
        } else if (name == "congruences") {
            CongruenceConfig cfg;
            if (max_n > 0) cfg.max_n = max_n;
            res = run_congruence_suite(cfg);
        } else {
            throw std::invalid_argument("unknown suite '" + name + "'");
        }
        if (format == "csv" && text.tellp() == 0) text << defect_csv_header() << "\n";
        append_suite(text, res, format);
        if (!res.all_pass) all_pass = false;
    };

    if (suite == "all") {
        for (const char* s :
             {"inversion", "lipschitz", "classical-lipschitz", "boundary", "pairing", "congruences"})
            run(s);
    } else {
        run(suite);
    }
    text << (all_pass ? "RESULT: pass\n" : "RESULT: fail\n");
    out.write(text.str());
    return all_pass ? kExitOk : kExitFailedIdentity;
}

// ---------------------------------------------------------- formal-group ---

int cmd_formal_group(int order, const std::string& emit, const std::string& specialize,
                     const std::string& format, const OutputSink& out) {
    std::ostringstream os;
    const bool want_series = emit == "all" || emit == "series";
    const bool want_numbers = emit == "all" || emit == "numbers";
    const bool want_law = emit == "law";

    if (want_series || want_law) {
        FormalGroupData fg = build_formal_group(order);
        if (want_series) {
            if (format == "json") {
                os << "{\"order\":" << order << ",\"F\":[";
                for (std::size_t k = 0; k <= fg.F.order(); ++k)
                    os << (k ? "," : "") << fg.F.coeff(k).to_json();
                os << "],\"G\":[";
                for (std::size_t k = 0; k <= fg.G.order(); ++k)
                    os << (k ? "," : "") << fg.G.coeff(k).to_json();
                os << "]}\n";
            } else {
                for (std::size_t k = 1; k <= fg.F.order(); ++k)
                    os << "F[s^" << k << "] = " << fg.F.coeff(k).str() << "\n";
                for (std::size_t k = 1; k <= fg.G.order(); ++k)
                    os << "G[t^" << k << "] = " << fg.G.coeff(k).str() << "\n";
            }
        }
        if (want_law) {
            auto law = formal_group_law(fg);
            for (std::size_t i = 0; i < law.size(); ++i)
                for (std::size_t j = 0; j < law[i].size(); ++j) {
                    if (law[i][j].is_zero()) continue;
                    os << "Phi[s1^" << i << " s2^" << j << "] = " << law[i][j].str() << "\n";
                }
        }
    }
    if (want_numbers) {
        UniversalBernoulli ub = universal_bernoulli(order);
        std::vector<Rational> spec_values;
        if (specialize == "classical")
            spec_values = classical_specialization(ub.numbers.front().arity());
        else if (!specialize.empty()) {
            std::istringstream ss(specialize);
            std::string tok;
            while (std::getline(ss, tok, ',')) spec_values.push_back(Rational::from_string(tok));
            if (spec_values.size() != ub.numbers.front().arity())
                throw std::invalid_argument("--specialize needs " +
                                            std::to_string(ub.numbers.front().arity()) + " values");
        }
        for (int n = 0; n <= order; ++n) {
            const auto& b = ub.numbers[static_cast<std::size_t>(n)];
            if (format == "json")
                os << "{\"n\":" << n << ",\"B\":" << b.to_json();
            else
                os << "B^_" << n << " = " << b.str();
            if (!spec_values.empty()) {
                const Rational v = b.specialize(spec_values);
                os << (format == "json" ? ",\"specialized\":\"" + v.str() + "\"" : "  ->  " + v.str());
            }
            os << (format == "json" ? "}\n" : "\n");
        }
    }
    out.write(os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"delta rational functions, Appell sequences and Lipschitz summation identities"};
    app.require_subcommand(1);

    std::string format = "pretty", out_path, registry, desc = "bernoulli";
    unsigned jobs = 1;
    app.add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", out_path);
    app.add_option("--jobs", jobs);
    app.add_option("--registry", registry, "descriptor registry JSON file");

    auto* ap = app.add_subcommand("appell", "Appell polynomials, phi vectors and R_n tables");
    int ap_max = 6;
    std::string ap_emit = "all";
    ap->add_option("--desc", desc);
    ap->add_option("--max", ap_max);
    ap->add_option("--emit", ap_emit)->check(CLI::IsMember({"all", "polys", "phi", "r-poly"}));

    auto* ev = app.add_subcommand("eval", "evaluate delta / extended delta functions");
    std::string ev_fn = "delta", ev_grid, ev_case = "p";
    int ev_n = -1;
    std::vector<std::string> ev_q;
    ev->add_option("--fn", ev_fn);
    ev->add_option("--n", ev_n);
    ev->add_option("--q", ev_q, "complex points a+bi (repeatable)");
    ev->add_option("--grid", ev_grid, "re0:re1:n,im0:im1:m");
    ev->add_option("--desc", desc);
    ev->add_option("--case", ev_case)->check(CLI::IsMember({"p", "q"}));

    auto* vf = app.add_subcommand("verify", "run identity suites; exit 0 iff all pass");
    std::string vf_suite = "all", vf_radii, vf_k;
    long vf_K = 0;
    int vf_maxn = 0, vf_rays = 0;
    std::vector<std::string> vf_z, vf_tau, vf_labels;
    vf->add_option("--suite", vf_suite)
        ->check(CLI::IsMember({"inversion", "lipschitz", "classical-lipschitz", "boundary",
                               "pairing", "congruences", "all"}));
    double vf_tol = 0.0;
    auto* vf_tol_opt = vf->add_option("--tol", vf_tol);
    vf->add_option("--K", vf_K);
    vf->add_option("--max-n", vf_maxn);
    vf->add_option("--radii", vf_radii, "r0:r1:count");
    vf->add_option("--rays", vf_rays);
    vf->add_option("--z", vf_z, "complex points for classical-lipschitz");
    vf->add_option("--tau", vf_tau, "complex points for lipschitz");
    vf->add_option("--k", vf_k, "k range lo..hi for classical-lipschitz");
    vf->add_option("--desc-list", vf_labels, "descriptor labels for lipschitz");

    auto* fgc = app.add_subcommand("formal-group", "Lazard-universal series and numbers");
    int fg_order = 6;
    std::string fg_emit = "all", fg_spec;
    fgc->add_option("--order", fg_order);
    fgc->add_option("--emit", fg_emit)->check(CLI::IsMember({"all", "series", "numbers", "law"}));
    fgc->add_option("--specialize", fg_spec, "'classical' or comma-separated rationals");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    OutputSink sink{out_path};
    try {
        if (ap->parsed()) return cmd_appell(desc, ap_max, ap_emit, format, sink, registry);
        if (ev->parsed())
            return cmd_eval(ev_fn, ev_n, ev_q, ev_grid, desc, ev_case, format, sink, registry);
        if (vf->parsed())
            return cmd_verify(vf_suite, vf_tol_opt->count() > 0, vf_tol, vf_K, vf_maxn, vf_radii,
                              vf_rays, vf_z, vf_tau, vf_k, vf_labels, jobs, format, sink);
        if (fgc->parsed()) return cmd_formal_group(fg_order, fg_emit, fg_spec, format, sink);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailedIdentity;
    }
    return kExitConfigError;
}
