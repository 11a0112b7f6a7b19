#include "polylip/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace polylip {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(std::complex<double> v) {
    std::string s = fmt_double(v.real());
    if (v.imag() >= 0.0 || std::isnan(v.imag())) s += "+";
    s += fmt_double(v.imag());
    s += "i";
    return s;
}

DefectReport DefectReport::make(std::string identity, int n, std::complex<double> tau, long K,
                                std::complex<double> lhs, std::complex<double> rhs,
                                double tail_estimate) {
    DefectReport r;
    r.identity = std::move(identity);
    r.n = n;
    r.tau = tau;
    r.K = K;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_defect = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    r.rel_defect = scale > 0.0 ? r.abs_defect / scale : r.abs_defect;
    r.tail_estimate = tail_estimate;
    return r;
}

std::string defect_csv_header() {
    return "identity,n,re_tau,im_tau,K,abs_defect,rel_defect,tail_estimate";
}

std::string defect_csv_row(const DefectReport& r) {
    std::ostringstream os;
    os << r.identity << ',' << r.n << ',' << fmt_double(r.tau.real()) << ','
       << fmt_double(r.tau.imag()) << ',' << r.K << ',' << fmt_double(r.abs_defect) << ','
       << fmt_double(r.rel_defect) << ',' << fmt_double(r.tail_estimate);
    return os.str();
}

std::string defect_json_line(const DefectReport& r) {
    std::ostringstream os;
    os << "{\"identity\":\"" << r.identity << "\",\"n\":" << r.n
       << ",\"re_tau\":" << fmt_double(r.tau.real()) << ",\"im_tau\":" << fmt_double(r.tau.imag())
       << ",\"K\":" << r.K << ",\"lhs_re\":" << fmt_double(r.lhs.real())
       << ",\"lhs_im\":" << fmt_double(r.lhs.imag()) << ",\"rhs_re\":" << fmt_double(r.rhs.real())
       << ",\"rhs_im\":" << fmt_double(r.rhs.imag())
       << ",\"abs_defect\":" << fmt_double(r.abs_defect)
       << ",\"rel_defect\":" << fmt_double(r.rel_defect)
       << ",\"tail_estimate\":" << fmt_double(r.tail_estimate) << "}";
    return os.str();
}

std::string defect_pretty(const DefectReport& r) {
    std::ostringstream os;
    os << r.identity << "  n=" << r.n << "  tau=" << fmt_complex(r.tau) << "  K=" << r.K
       << "  |defect|=" << fmt_double(r.abs_defect) << "  tail~" << fmt_double(r.tail_estimate);
    return os.str();
}

std::string congruence_name(CongruenceId id) {
    switch (id) {
        case CongruenceId::US1: return "US1";
        case CongruenceId::US2: return "US2";
        case CongruenceId::UK: return "UK";
        default: return "CvS";
    }
}

std::string verdict_json(const CongruenceVerdict& v) {
    std::ostringstream os;
    os << "{\"congruence\":\"" << congruence_name(v.id) << "\",\"n\":" << v.n << ",\"p\":" << v.p
       << ",\"applicable\":" << (v.applicable ? "true" : "false")
       << ",\"holds\":" << (v.holds ? "true" : "false") << ",\"witness\":" << v.witness
       << ",\"notes\":\"" << v.notes << "\"}";
    return os.str();
}

std::string verdict_pretty(const CongruenceVerdict& v) {
    std::ostringstream os;
    os << congruence_name(v.id) << "  n=" << v.n;
    if (v.p) os << "  p=" << v.p;
    if (!v.applicable)
        os << "  inapplicable";
    else
        os << (v.holds ? "  holds" : "  FAILS");
    if (!v.notes.empty()) os << "  (" << v.notes << ")";
    return os.str();
}

}  // namespace polylip
