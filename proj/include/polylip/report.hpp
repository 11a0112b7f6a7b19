#pragma once

#include <complex>
#include <string>
#include <vector>

namespace polylip {

/// Fixed-format float printing (17 significant digits, round-trip safe).
std::string fmt_double(double v);
std::string fmt_complex(std::complex<double> v);  // "a+bi" form

/// Record of one numerically verified identity.
struct DefectReport {
    std::string identity;
    int n = 0;
    std::complex<double> tau{0.0, 0.0};  // the grid parameter (tau, q or z)
    long K = 0;
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double abs_defect = 0.0;
    double rel_defect = 0.0;
    double tail_estimate = 0.0;

    static DefectReport make(std::string identity, int n, std::complex<double> tau, long K,
                             std::complex<double> lhs, std::complex<double> rhs,
                             double tail_estimate);
};

std::string defect_csv_header();
std::string defect_csv_row(const DefectReport& r);
std::string defect_json_line(const DefectReport& r);
std::string defect_pretty(const DefectReport& r);

enum class CongruenceId { US1, US2, UK, CvS };
std::string congruence_name(CongruenceId id);

struct CongruenceVerdict {
    CongruenceId id;
    int n = 0;
    int p = 0;  // 0 when not applicable to the congruence
    bool applicable = true;
    bool holds = false;
    std::string witness;  // reduced polynomial (MultiPoly JSON) or rational remainder
    std::string notes;
};

std::string verdict_json(const CongruenceVerdict& v);
std::string verdict_pretty(const CongruenceVerdict& v);

}  // namespace polylip
