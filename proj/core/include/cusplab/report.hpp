#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cusplab/density.hpp"

namespace cusplab {

// CSV body for a spectrum series: header `k,ell,lambda,scaled` with
// scaled = k^exponent * value, rows sorted by k ascending, floats rendered
// with 12 significant digits. Output is deterministic byte-for-byte.
std::string spectrum_csv(const SpectrumSeries& series, double exponent = 8.0 / 3.0);

using ParamValue = std::variant<double, long long, bool, std::string>;

// Machine-readable verdict of a verification run. Keys are emitted in the
// fixed order: experiment, parameters, A, A_power, window, g_estimate,
// G_estimate, tolerance, pass. Absent optional fields are emitted as null so
// the schema is stable across experiments.
struct VerdictReport {
    std::string experiment;
    std::vector<std::pair<std::string, ParamValue>> parameters;
    std::optional<double> A;
    std::optional<double> A_power;
    std::optional<std::pair<std::size_t, std::size_t>> window;
    std::optional<double> g_estimate;
    std::optional<double> G_estimate;
    double tolerance = 0.0;
    bool pass = false;
};

std::string verdict_json(const VerdictReport& report);

}  // namespace cusplab
