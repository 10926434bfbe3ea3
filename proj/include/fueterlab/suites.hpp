#pragma once

#include <functional>

#include "fueterlab/report.hpp"

namespace fueterlab {

/// Parameter grid for the verification suites. Defaults keep a full run
/// under a couple of minutes.
struct SuiteConfig {
    int n_max = 3;
    int deg_max = 8;
    int trunc = 64;
    double tol = 1e-8;
    unsigned seed = 0;
};

/// Runs the jobs on a small worker pool (size from FUETERLAB_THREADS, else
/// hardware concurrency) and returns the reports sorted by name then
/// params; the result is deterministic regardless of pool size.
std::vector<VerificationReport> run_checks(
    std::vector<std::function<VerificationReport()>> jobs);

/// suite is one of: appell, fueter, hermite, fock, bargmann, kernel, all.
/// Throws std::invalid_argument on an unknown name.
std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const SuiteConfig& cfg);

bool suite_passed(const std::vector<VerificationReport>& reports);

}  // namespace fueterlab
