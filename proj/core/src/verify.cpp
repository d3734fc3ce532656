#include "cusplab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cusplab/cusp_state.hpp"
#include "cusplab/density.hpp"
#include "cusplab/homokernel.hpp"
#include "cusplab/spectral.hpp"

namespace cusplab {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

double rel_dev(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

// -- individual checks -------------------------------------------------------

CheckResult check_constant_identity() {
    const double mu = mu_coefficient(1.0, 3);
    const double reference = (1.0 / 3.0) * std::pow(2.0 / M_PI, 1.25);
    const double dev = rel_dev(mu, reference);
    return {"constant identity mu(1,3)", dev <= 1e-12,
            fmt("mu=%.17g, closed form %.17g, rel dev %.3g (tol 1e-12)", mu, reference, dev)};
}

CheckResult check_coefficient_quadrature() {
    double worst = 0.0;
    for (double zeta : {0.5, 1.0, 2.0})
        for (double c : {0.25, 0.5, 1.0}) {
            const CuspState state(zeta, c, Symmetry::symmetric);
            const double quad = coefficient_A(state, coefficient_grid(zeta));
            worst = std::max(worst, rel_dev(quad, coefficient_A_closed(state)));
        }
    return {"decay coefficient quadrature vs closed form", worst <= 1e-8,
            fmt("9 parameter sets, worst rel dev %.3g (tol 1e-8)", worst)};
}

CheckResult check_rank_one() {
    const CuspState state(1.0, 0.0, Symmetry::symmetric);
    const RadialGrid grid = density_grid(1.0);
    const std::vector<double> channel0 = channel_spectrum(state, 0, grid);
    const double lambda1 = channel0.at(0);
    const double lambda2 = channel0.at(1);
    const double target = 2.0 * M_PI * M_PI;
    const double dev1 = rel_dev(lambda1, target);
    const double ratio = lambda2 / lambda1;
    double worst_higher = 0.0;
    for (int l = 1; l <= 10; ++l) {
        const std::vector<double> ch = channel_spectrum(state, l, grid);
        if (!ch.empty()) worst_higher = std::max(worst_higher, ch.front());
    }
    const bool pass = dev1 <= 1e-8 && ratio < 1e-10 && worst_higher < 1e-12;
    return {"rank-one degeneration at zero coupling", pass,
            fmt("lambda_1 rel dev %.3g (tol 1e-8), lambda_2/lambda_1 %.3g (tol 1e-10), "
                "top higher-channel value %.3g (tol 1e-12)",
                dev1, ratio, worst_higher)};
}

// Shared artifacts of the decay-law runs (defaults: zeta=1, c=0.5, l_max=48,
// n=320, r_max=14, u_order=64).
struct MainLawArtifacts {
    CuspState sym{1.0, 0.5, Symmetry::symmetric};
    CuspState anti{1.0, 0.5, Symmetry::antisymmetric};
    SpectrumSeries sym_series;
    SpectrumSeries anti_series;
    double sym_trace = 0.0;
    double A = 0.0;
    double A_power = 0.0;
    PlateauEstimate window_estimate;
    bool window_valid = false;
};

MainLawArtifacts compute_main_law_artifacts() {
    MainLawArtifacts art;
    const RadialGrid grid = density_grid(1.0);
    const AssembleOptions options;  // l_max=48, u_order=64, refine, parallel
    art.sym_series = assemble_spectrum(art.sym, grid, options);
    art.anti_series = assemble_spectrum(art.anti, grid, options);
    art.sym_trace = trace_sum(art.sym, grid);
    art.A = coefficient_A(art.sym, coefficient_grid(1.0));
    art.A_power = std::pow(art.A, 8.0 / 3.0);

    const std::size_t hi = std::min<std::size_t>(400, art.sym_series.trust_k);
    if (hi >= 100) {
        art.window_estimate = plateau_estimate(art.sym_series, 3.0 / 8.0, 100, hi);
        art.window_valid = true;
    }
    return art;
}

CheckResult check_trace_consistency(const MainLawArtifacts& art) {
    const double merged = art.sym_series.sum();
    const double dev = rel_dev(merged, art.sym_trace);
    return {"trace consistency across pipelines", dev <= 1e-6,
            fmt("spectrum sum %.12g vs direct quadrature %.12g, rel dev %.3g (tol 1e-6)",
                merged, art.sym_trace, dev)};
}

CheckResult check_plateau(const MainLawArtifacts& art) {
    if (!art.window_valid)
        return {"scaled-spectrum plateau brackets the decay constant", false,
                "trust window too short for k in [100, 400]"};
    const PlateauEstimate& est = art.window_estimate;
    const double dev = rel_dev(est.scaled_median, art.A_power);
    const bool brackets = est.scaled_min <= art.A_power && art.A_power <= est.scaled_max;
    const bool pass = dev <= 0.25 && brackets;
    return {"scaled-spectrum plateau brackets the decay constant", pass,
            fmt("median k^{8/3} lambda_k = %.6g vs A^{8/3} = %.6g, rel dev %.3g (tol 0.25); ",
                est.scaled_median, art.A_power, dev) +
                fmt("window spread [%.6g, %.6g] ", est.scaled_min, est.scaled_max) +
                (brackets ? "brackets the target" : "does NOT bracket the target")};
}

CheckResult check_antisymmetric(const MainLawArtifacts& art) {
    const std::size_t k_probe = 300;
    if (art.sym_series.expanded.size() < k_probe || art.anti_series.expanded.size() < k_probe)
        return {"antisymmetric suppression of the decay law", false,
                "spectra shorter than k = 300"};
    const double scale = std::pow(static_cast<double>(k_probe), 8.0 / 3.0);
    const double sym_scaled = scale * art.sym_series.expanded[k_probe - 1];
    const double anti_scaled = scale * art.anti_series.expanded[k_probe - 1];
    const double ratio = anti_scaled / sym_scaled;

    // trend over the window: the scaled series must drift down, measured by
    // half-window medians (pointwise monotonicity is impossible across
    // constant multiplicity blocks)
    const std::size_t hi = std::min<std::size_t>(400, art.anti_series.trust_k);
    bool decreasing = false;
    double lower_median = 0.0, upper_median = 0.0;
    if (hi >= 101) {
        const std::size_t mid = (100 + hi) / 2;
        lower_median = plateau_estimate(art.anti_series, 3.0 / 8.0, 100, mid).scaled_median;
        upper_median = plateau_estimate(art.anti_series, 3.0 / 8.0, mid + 1, hi).scaled_median;
        decreasing = upper_median < lower_median;
    }
    const bool pass = ratio < 0.20 && decreasing;
    return {"antisymmetric suppression of the decay law", pass,
            fmt("scaled value at k=300: antisymmetric/symmetric = %.4g (tol 0.20); ", ratio) +
                fmt("scaled medians fall from %.4g to %.4g over the window", lower_median,
                    upper_median)};
}

CheckResult check_line_law() {
    const HomogeneousKernelSpec spec(1.0, 1, KernelFamily::scalar_abs,
                                     WeightDescriptor::gaussian(1.0),
                                     WeightDescriptor::gaussian(1.0));
    const SpectrumSeries series = nystrom_1d_spectrum(spec, 2000, 6.0);
    const PlateauEstimate est = plateau_estimate(series.expanded, 0.5, 40, 300);
    const double target = 2.0 / M_PI;
    const double dev = rel_dev(est.scaled_median, target);
    return {"line-kernel eigenvalue law", dev <= 0.10,
            fmt("median k^2 s_k over [40,300] = %.6g vs 2/pi = %.6g, rel dev %.3g (tol 0.10)",
                est.scaled_median, target, dev)};
}

CheckResult check_smooth_collapse() {
    const WeightDescriptor g = WeightDescriptor::gaussian(1.0);
    const SpectrumSeries series = nystrom_1d_kernel_spectrum(
        [](double x, double y) { return std::exp(-(x - y) * (x - y)); }, g, g, 2000, 6.0);
    const double s60 = series.expanded.at(59);
    return {"smooth-kernel spectral collapse", s60 < 1e-12,
            fmt("s_60 = %.3g (tol 1e-12)", s60)};
}

CheckResult check_matrix_identities() {
    int violations = 0;
    double worst_mismatch = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
        for (double p : {0.5, 0.75, 1.0}) {
            const IdentityReport rep = finite_matrix_identities(seed, 50, p);
            violations += static_cast<int>(rep.violations.size());
            worst_mismatch = std::max({worst_mismatch, rep.max_spectral_mismatch,
                                       rep.max_crossover_mismatch});
        }
    return {"finite-matrix operator identities", violations == 0,
            fmt("100 seeds x size 50 x p in {1/2, 3/4, 1}: %g violations, worst spectral "
                "mismatch %.3g (tol 1e-10)",
                static_cast<double>(violations), worst_mismatch)};
}

CheckResult check_symbol_consistency() {
    double worst_sphere = 0.0;
    // sphere-integral identity for both families: the symbol magnitude is
    // constant on the unit sphere, so the surface integral is elementary
    struct Case { double alpha; int d; KernelFamily family; };
    const Case cases[] = {{1.0, 3, KernelFamily::scalar_abs},  {0.5, 2, KernelFamily::scalar_abs},
                          {-0.5, 1, KernelFamily::scalar_abs}, {1.5, 1, KernelFamily::scalar_abs},
                          {0.0, 3, KernelFamily::gradient},    {0.5, 2, KernelFamily::gradient},
                          {2.0, 3, KernelFamily::gradient}};
    for (const Case& cs : cases) {
        const HomogeneousKernelSpec spec(cs.alpha, cs.d, cs.family);
        const double p = spec.p();
        const double reconstructed = std::pow(std::abs(fourier_symbol(spec, 1.0)), p) *
                                     sphere_area(cs.d) /
                                     (cs.d * std::pow(2.0 * M_PI, cs.d));
        const double direct = cs.family == KernelFamily::scalar_abs
                                  ? mu_coefficient(cs.alpha, cs.d)
                                  : nu_coefficient(cs.alpha, cs.d);
        worst_sphere = std::max(worst_sphere, rel_dev(reconstructed, direct));
    }

    double worst_homog = 0.0;
    const HomogeneousKernelSpec scalar13(1.0, 3, KernelFamily::scalar_abs);
    const HomogeneousKernelSpec grad03(0.0, 3, KernelFamily::gradient);
    for (const HomogeneousKernelSpec* spec : {&scalar13, &grad03})
        for (double xi : {0.7, 1.3, 2.5})
            for (double t : {2.0, 3.7}) {
                const double direct = fourier_symbol(*spec, t * xi);
                const double scaled =
                    std::pow(t, spec->symbol_order()) * fourier_symbol(*spec, xi);
                worst_homog = std::max(worst_homog, rel_dev(direct, scaled));
            }

    const bool pass = worst_sphere <= 1e-10 && worst_homog <= 1e-12;
    return {"symbol consistency and homogeneity", pass,
            fmt("sphere-integral identity worst rel dev %.3g (tol 1e-10); homogeneity worst "
                "rel dev %.3g (tol 1e-12)",
                worst_sphere, worst_homog)};
}

}  // namespace

bool VerificationOutcome::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> suite_names() { return {"quick", "homokern", "plateau", "full"}; }

VerificationOutcome run_suite(const std::string& suite) {
    VerificationOutcome out;
    out.suite = suite;

    const bool quick = suite == "quick" || suite == "full";
    const bool homokern = suite == "homokern" || suite == "full";
    const bool plateau = suite == "plateau" || suite == "full";
    if (!quick && !homokern && !plateau)
        throw std::invalid_argument("unknown suite '" + suite + "' (expected quick, homokern, plateau or full)");

    if (suite == "quick") out.headline_tolerance = 1e-8;
    else if (suite == "homokern") out.headline_tolerance = 0.10;
    else out.headline_tolerance = 0.25;

    if (quick) {
        out.checks.push_back(check_constant_identity());
        out.checks.push_back(check_coefficient_quadrature());
        out.checks.push_back(check_rank_one());
    }
    if (plateau) {
        const MainLawArtifacts art = compute_main_law_artifacts();
        out.checks.push_back(check_trace_consistency(art));
        out.checks.push_back(check_plateau(art));
        out.checks.push_back(check_antisymmetric(art));
        out.A = art.A;
        out.A_power = art.A_power;
        if (art.window_valid) {
            out.window = {art.window_estimate.k_lo, art.window_estimate.k_hi};
            out.g_estimate = art.window_estimate.g_estimate;
            out.G_estimate = art.window_estimate.G_estimate;
        }
    }
    if (homokern) {
        out.checks.push_back(check_line_law());
        out.checks.push_back(check_smooth_collapse());
    }
    if (quick) {
        out.checks.push_back(check_matrix_identities());
        out.checks.push_back(check_symbol_consistency());
    }
    return out;
}

}  // namespace cusplab
