#include "cusplab/report.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace cusplab {

namespace {

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

std::string spectrum_csv(const SpectrumSeries& series, double exponent) {
    std::string out = "k,ell,lambda,scaled\n";
    for (std::size_t k = 1; k <= series.expanded.size(); ++k) {
        const double value = series.expanded[k - 1];
        const double scaled = std::pow(static_cast<double>(k), exponent) * value;
        out += std::to_string(k);
        out += ',';
        out += std::to_string(series.expanded_channel[k - 1]);
        out += ',';
        out += format_g12(value);
        out += ',';
        out += format_g12(scaled);
        out += '\n';
    }
    return out;
}

std::string verdict_json(const VerdictReport& report) {
    nlohmann::ordered_json j;
    j["experiment"] = report.experiment;

    nlohmann::ordered_json params;
    for (const auto& [key, value] : report.parameters)
        std::visit([&](const auto& v) { params[key] = v; }, value);
    j["parameters"] = std::move(params);

    if (report.A) j["A"] = *report.A; else j["A"] = nullptr;
    if (report.A_power) j["A_power"] = *report.A_power; else j["A_power"] = nullptr;
    if (report.window)
        j["window"] = nlohmann::ordered_json::array({report.window->first, report.window->second});
    else
        j["window"] = nullptr;
    if (report.g_estimate) j["g_estimate"] = *report.g_estimate; else j["g_estimate"] = nullptr;
    if (report.G_estimate) j["G_estimate"] = *report.G_estimate; else j["G_estimate"] = nullptr;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

}  // namespace cusplab
