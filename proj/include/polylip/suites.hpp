#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "polylip/report.hpp"

namespace polylip {

using Cplx = std::complex<double>;

/// "a+bi" with rational or decimal components ("i", "-i", "1/2+i", "0.3+0.7i").
Cplx parse_complex(const std::string& s);

/// "start:stop:count" -> count evenly spaced values (count >= 1).
std::vector<double> parse_axis(const std::string& s);

struct RateCheck {
    DefectReport at_k;
    DefectReport at_2k;
    double ratio;   // defect(K) / defect(2K)
    bool pass;
};

struct SuiteResult {
    std::vector<DefectReport> reports;
    std::vector<CongruenceVerdict> verdicts;
    std::vector<RateCheck> rate_checks;
    std::vector<std::pair<std::string, bool>> checks;  // named boolean checks
    bool all_pass = true;
};

/// Run fn(i) for i in [0, count) on up to jobs threads; results must be
/// written to per-index slots so output order stays deterministic.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

struct InversionConfig {
    std::vector<int> ns{-3, -2, -1, 0, 1, 2, 3};
    double r0 = 0.3, r1 = 0.7;
    int radii = 10;
    int rays = 10;      // directions 2 pi (j+1/2)/rays, avoiding [0,+inf)
    double tol = 1e-10;
    unsigned jobs = 1;
};
SuiteResult run_inversion_suite(const InversionConfig& cfg);

struct LipschitzConfig {
    std::vector<std::string> labels{"bernoulli", "a-seq"};
    std::vector<int> ns{-2, -1, 0, 1, 2};
    std::vector<Cplx> taus{{0.0, 1.0}, {0.25, 1.0}, {0.5, 2.0}};
    bool conjugates = true;
    long K = 100000;
    double tol = 1e-3;
    bool rate_check = true;
    double min_ratio = 1.8;
    double rate_floor = 1e-12;  // defect at 2K below this counts as converged
    unsigned jobs = 1;
};
SuiteResult run_lipschitz_suite(const LipschitzConfig& cfg);

struct ClassicalLipschitzConfig {
    std::vector<int> ks{2, 3, 4, 5, 6};
    std::vector<Cplx> zs{{0.0, 1.0}, {0.5, 1.0}, {0.3, 0.7}};
    double rel_tol = 1e-8;
    unsigned jobs = 1;
};
SuiteResult run_classical_lipschitz_suite(const ClassicalLipschitzConfig& cfg);

struct BoundaryConfig {
    std::vector<int> ns{-1, -2, -3};
    std::vector<double> xs{0.25, 0.5, 0.75};
    double eps = 2e-3;
    double tol = 1e-6;
    unsigned jobs = 1;
};
SuiteResult run_boundary_suite(const BoundaryConfig& cfg);

struct PairingConfig {
    int max_n = 4;  // hyperfunction indices 1..max_n and -1, 0
    int max_m = 4;  // monomial degrees 0..max_m
    double tol = 1e-9;
    double margin_a = 0.2, margin_b = 0.35;
    double independence_tol = 1e-10;
    unsigned jobs = 1;
};
SuiteResult run_pairing_suite(const PairingConfig& cfg);

struct CongruenceConfig {
    int max_n = 14;                     // US1/US2 range
    std::vector<int> kummer_ps{5, 7, 11};
    int cvs_max = 30;
    int specialize_max = 20;            // classical specialization depth
};
SuiteResult run_congruence_suite(const CongruenceConfig& cfg);

}  // namespace polylip
