#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cusplab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationOutcome {
    std::string suite;
    std::vector<CheckResult> checks;
    // Tolerance of the suite's headline check, reported in the verdict.
    double headline_tolerance = 0.0;
    // Artifacts of the decay-law run, present when the suite computes it.
    std::optional<double> A;
    std::optional<double> A_power;
    std::optional<std::pair<std::size_t, std::size_t>> window;
    std::optional<double> g_estimate;
    std::optional<double> G_estimate;

    bool all_pass() const;
};

// Available suites: "quick" (closed-form and finite-matrix checks),
// "homokern" (line-kernel laws), "plateau" (density-operator decay law),
// "full" (everything). Unknown names raise std::invalid_argument.
std::vector<std::string> suite_names();
VerificationOutcome run_suite(const std::string& suite);

}  // namespace cusplab
