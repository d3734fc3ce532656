#include <cmath>
#include <stdexcept>
#include <vector>

#include "cusplab/homokernel.hpp"
#include "cusplab/quadrature.hpp"
#include "cusplab/spectral.hpp"
#include "doctest.h"

using namespace cusplab;

namespace {

// Regularized Fourier transforms of |x|^1 on R^3 and R^1, derived by damping
// with e^{-s|x|^2} and integrating the damping correction by parts until it
// is absolutely convergent. The result must be independent of the damping
// scale lambda; that independence is itself part of the test.
double regularized_symbol_d3_alpha1(double xi, double lambda) {
    const double s = 1.0 / (lambda * lambda);
    const Quadrature q = gauss_legendre(3000, 0.0, 12.0 * lambda);
    double i1 = 0.0, i2 = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        const double r = q.nodes[k], w = q.weights[k];
        const double eta = std::exp(-s * r * r);
        i1 += w * std::sin(xi * r) * r * r * eta;
        const double u = std::sqrt(s) * r;
        const double q1 = std::exp(-u * u) *
                          (-16.0 * std::pow(u, 5) + 112.0 * u * u * u - 156.0 * u + 24.0 / u);
        i2 += w * std::sin(xi * r) * std::pow(s, 1.5) * q1 * r;
    }
    return 4.0 * M_PI / xi * (i1 + i2 / std::pow(xi, 4));
}

double regularized_symbol_d1_alpha1(double xi, double lambda) {
    const double s = 1.0 / (lambda * lambda);
    const Quadrature q = gauss_legendre(3000, 0.0, 12.0 * lambda);
    double i1 = 0.0, i2 = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        const double r = q.nodes[k], w = q.weights[k];
        const double eta = std::exp(-s * r * r);
        i1 += w * std::cos(xi * r) * r * eta;
        i2 += w * std::cos(xi * r) * (6.0 * s * r - 4.0 * s * s * r * r * r) * eta;
    }
    return 2.0 * (i1 - i2 / (xi * xi));
}

}  // namespace

TEST_SUITE("homokernel") {

TEST_CASE("weight descriptors") {
    const WeightDescriptor g = WeightDescriptor::gaussian(2.0, 1.0);
    CHECK(g(1.0) == 1.0);
    CHECK(g(0.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(g(2.5) == doctest::Approx(std::exp(-2.0 * 2.25)).epsilon(1e-15));

    const WeightDescriptor b = WeightDescriptor::bump(1.5, -1.0);
    CHECK(b(-1.0) == 1.0);          // mollifier is normalized to 1 at its center
    CHECK(b(0.5) == 0.0);           // support boundary: exactly zero from there on
    CHECK(b(2.0) == 0.0);
    CHECK(b(-0.25) > 0.0);
    CHECK(b(-0.25) < 1.0);
    // symmetric about the center
    CHECK(b(-1.7) == doctest::Approx(b(-0.3)).epsilon(1e-15));

    CHECK_THROWS_AS(WeightDescriptor::gaussian(0.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightDescriptor::bump(-1.0), std::invalid_argument);
}

TEST_CASE("kernel spec: exponent, degeneracy, validation") {
    CHECK(HomogeneousKernelSpec(1.0, 3).p() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(HomogeneousKernelSpec(1.0, 1).p() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(HomogeneousKernelSpec(0.5, 2).p() == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(HomogeneousKernelSpec(1.0, 3).symbol_order() == doctest::Approx(-4.0));

    // scalar family degenerates at even alpha >= 0 (those |x|^alpha are
    // polynomials), the gradient family at odd alpha >= 1
    CHECK(HomogeneousKernelSpec(0.0, 3).degenerate());
    CHECK(HomogeneousKernelSpec(2.0, 3).degenerate());
    CHECK(!HomogeneousKernelSpec(1.0, 3).degenerate());
    CHECK(!HomogeneousKernelSpec(0.5, 3).degenerate());
    CHECK(HomogeneousKernelSpec(1.0, 3, KernelFamily::gradient).degenerate());
    CHECK(HomogeneousKernelSpec(3.0, 2, KernelFamily::gradient).degenerate());
    CHECK(!HomogeneousKernelSpec(0.0, 3, KernelFamily::gradient).degenerate());
    CHECK(!HomogeneousKernelSpec(2.0, 3, KernelFamily::gradient).degenerate());

    CHECK_THROWS_AS(HomogeneousKernelSpec(1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousKernelSpec(1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(HomogeneousKernelSpec(-3.0, 3), std::invalid_argument);
}

TEST_CASE("fourier symbol: closed values and degenerate zeros") {
    const HomogeneousKernelSpec s31(1.0, 3);
    CHECK(fourier_symbol(s31, 1.0) == doctest::Approx(-8.0 * M_PI).epsilon(1e-14));
    CHECK(fourier_symbol(s31, 2.0) == doctest::Approx(-8.0 * M_PI / 16.0).epsilon(1e-14));

    const HomogeneousKernelSpec s11(1.0, 1);
    CHECK(fourier_symbol(s11, 1.0) == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(fourier_symbol(s11, 0.5) == doctest::Approx(-8.0).epsilon(1e-14));

    const HomogeneousKernelSpec g03(0.0, 3, KernelFamily::gradient);
    CHECK(fourier_symbol(g03, 1.0) == doctest::Approx(8.0 * M_PI).epsilon(1e-14));
    CHECK(fourier_symbol(g03, 2.0) == doctest::Approx(M_PI).epsilon(1e-14));

    // degenerate branches return exactly zero instead of hitting gamma poles
    CHECK(fourier_symbol(HomogeneousKernelSpec(2.0, 3), 1.3) == 0.0);
    CHECK(fourier_symbol(HomogeneousKernelSpec(0.0, 1), 0.7) == 0.0);
    CHECK(fourier_symbol(HomogeneousKernelSpec(1.0, 3, KernelFamily::gradient), 2.2) == 0.0);

    CHECK_THROWS_AS(fourier_symbol(s31, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fourier_symbol(s31, -1.0), std::invalid_argument);
}

TEST_CASE("fourier symbol agrees with a damped-transform oracle") {
    const HomogeneousKernelSpec s31(1.0, 3);
    const HomogeneousKernelSpec s11(1.0, 1);
    for (double lambda : {0.8, 1.0, 1.5})
        for (double xi : {0.5, 1.0, 2.0}) {
            CHECK(regularized_symbol_d3_alpha1(xi, lambda) ==
                  doctest::Approx(fourier_symbol(s31, xi)).epsilon(1e-10));
            CHECK(regularized_symbol_d1_alpha1(xi, lambda) ==
                  doctest::Approx(fourier_symbol(s11, xi)).epsilon(1e-10));
        }
}

TEST_CASE("fourier symbol is homogeneous of order -(alpha + d)") {
    const std::vector<HomogeneousKernelSpec> specs = {
        HomogeneousKernelSpec(1.0, 3),
        HomogeneousKernelSpec(0.5, 2),
        HomogeneousKernelSpec(1.5, 1),
        HomogeneousKernelSpec(0.5, 2, KernelFamily::gradient),
        HomogeneousKernelSpec(2.0, 3, KernelFamily::gradient)};
    for (const HomogeneousKernelSpec& spec : specs)
        for (double t : {2.0, 3.7}) {
            const double base = fourier_symbol(spec, 0.9);
            const double scaled = fourier_symbol(spec, 0.9 * t);
            CHECK(scaled ==
                  doctest::Approx(base * std::pow(t, spec.symbol_order())).epsilon(1e-12));
        }
}

TEST_CASE("spectral constants: pinned values and degenerate zeros") {
    CHECK(mu_coefficient(1.0, 3) == doctest::Approx(0.18955223039866365).epsilon(1e-15));
    CHECK(mu_coefficient(1.0, 3) ==
          doctest::Approx((1.0 / 3.0) * std::pow(2.0 / M_PI, 1.25)).epsilon(1e-15));
    CHECK(mu_coefficient(1.0, 1) == doctest::Approx(std::sqrt(2.0) / M_PI).epsilon(1e-14));
    CHECK(nu_coefficient(0.0, 3) == doctest::Approx(4.0 / (3.0 * M_PI)).epsilon(1e-14));
    CHECK(nu_coefficient(0.0, 1) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));

    CHECK(mu_coefficient(0.0, 3) == 0.0);
    CHECK(mu_coefficient(2.0, 3) == 0.0);
    CHECK(nu_coefficient(1.0, 3) == 0.0);
    CHECK(nu_coefficient(3.0, 3) == 0.0);

    CHECK_THROWS_AS(mu_coefficient(-3.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(nu_coefficient(-1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mu_coefficient(1.0, 0), std::invalid_argument);
}

TEST_CASE("spectral constants close the loop with the symbol on the sphere") {
    // (mu or nu) = |X(1)|^p |S^{d-1}| / (d (2 pi)^d): ties the coefficient
    // formulas to the Fourier symbol without sharing any gamma expressions
    struct Case {
        double alpha;
        int d;
        KernelFamily family;
    };
    const std::vector<Case> cases = {{1.0, 3, KernelFamily::scalar_abs},
                                     {0.5, 2, KernelFamily::scalar_abs},
                                     {-0.5, 1, KernelFamily::scalar_abs},
                                     {1.5, 1, KernelFamily::scalar_abs},
                                     {0.0, 3, KernelFamily::gradient},
                                     {0.5, 2, KernelFamily::gradient},
                                     {2.0, 3, KernelFamily::gradient}};
    for (const Case& c : cases) {
        const HomogeneousKernelSpec spec(c.alpha, c.d, c.family);
        const double coeff = c.family == KernelFamily::scalar_abs
                                 ? mu_coefficient(c.alpha, c.d)
                                 : nu_coefficient(c.alpha, c.d);
        const double from_symbol = std::pow(std::abs(fourier_symbol(spec, 1.0)), spec.p()) *
                                   sphere_area(c.d) /
                                   (c.d * std::pow(2.0 * M_PI, c.d));
        CHECK(coeff == doctest::Approx(from_symbol).epsilon(1e-10));
    }
}

TEST_CASE("sphere areas") {
    CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sphere_area(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    CHECK(sphere_area(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
    CHECK(sphere_area(6) == doctest::Approx(std::pow(M_PI, 3)).epsilon(1e-14));
    CHECK_THROWS_AS(sphere_area(0), std::invalid_argument);
}

TEST_CASE("model weight profile: two-particle case is a bare gaussian") {
    const ModelWeightProfile profile(2, {{0.5, 7.0}});
    CHECK(profile.h(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(profile.h(0.7) == doctest::Approx(std::exp(-0.5 * 0.49)).epsilon(1e-14));
    CHECK(profile.h_squared(0.7) == doctest::Approx(std::exp(-0.49)).epsilon(1e-14));

    // with no spectator coordinates the transverse rate cannot matter
    const ModelWeightProfile other(2, {{0.5, 0.001}});
    CHECK(profile.h(1.3) == other.h(1.3));

    CHECK_THROWS_AS(ModelWeightProfile(1, {{1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(ModelWeightProfile(2, {{0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(ModelWeightProfile(3, {{1.0, -2.0}}), std::invalid_argument);
}

TEST_CASE("model weight profile: spectator mass against a tensor quadrature") {
    // h(t)^2 = sum_g (pi / (2 sigma_y))^{3/2} e^{-2 sigma_t t^2} for N = 3;
    // recompute the spectator integral by brute force on a 64^3 tensor grid
    const std::vector<GaussianComponent> components = {
        {0.5, 0.5}, {0.8, 0.8}, {1.0, 1.0}, {1.2, 1.2}, {1.5, 1.5}, {2.0, 2.0}};
    const ModelWeightProfile profile(3, components);
    const double t = 0.7;

    const Quadrature axis = gauss_legendre(64, -6.0, 6.0);
    double brute = 0.0;
    for (const GaussianComponent& g : components) {
        double one_axis = 0.0;
        for (std::size_t i = 0; i < axis.size(); ++i)
            one_axis += axis.weights[i] * std::exp(-2.0 * g.sigma_y * axis.nodes[i] * axis.nodes[i]);
        brute += std::exp(-2.0 * g.sigma_t * t * t) * std::pow(one_axis, 3);
    }
    CHECK(profile.h_squared(t) == doctest::Approx(brute).epsilon(1e-8));
}

TEST_CASE("model weight profile: effective radius brackets the tolerance") {
    const ModelWeightProfile single(2, {{0.8, 1.0}});
    const double tol = 1e-12;
    const double R = single.effective_radius(tol);
    CHECK(single.h(R) <= tol * (1.0 + 1e-9));
    CHECK(single.h(0.95 * R) > tol);

    const ModelWeightProfile multi(3, {{0.5, 1.0}, {2.0, 0.3}});
    const double Rm = multi.effective_radius(tol);
    CHECK(multi.h(Rm) <= tol * (1.0 + 1e-9));
    CHECK(multi.h(1.5 * Rm) <= tol);

    CHECK_THROWS_AS(single.effective_radius(0.0), std::invalid_argument);
}

TEST_CASE("model weight profile: empty component list means h vanishes") {
    const ModelWeightProfile zero(4, {});
    CHECK(zero.h(0.0) == 0.0);
    CHECK(zero.h_squared(2.0) == 0.0);
    CHECK(zero.effective_radius(1e-12) == 0.0);
    CHECK(model_coefficient(HomogeneousKernelSpec(1.0, 3), WeightDescriptor::gaussian(1.0),
                            zero) == 0.0);
}

TEST_CASE("model coefficient: pinned gaussian product value") {
    // a(r) h(r) = e^{-r^2}: coefficient is mu_{1,3} * Int e^{-(3/4)|x|^2} dx
    //           = mu_{1,3} * (4 pi / 3)^{3/2} = 1.6250316088163983
    const HomogeneousKernelSpec spec(1.0, 3);
    const WeightDescriptor a = WeightDescriptor::gaussian(0.5);
    const ModelWeightProfile profile(2, {{0.5, 1.0}});
    const double value = model_coefficient(spec, a, profile);
    CHECK(value == doctest::Approx(1.6250316088163983).epsilon(1e-9));
    CHECK(value ==
          doctest::Approx(mu_coefficient(1.0, 3) * std::pow(4.0 * M_PI / 3.0, 1.5)).epsilon(1e-9));
}

TEST_CASE("model coefficient: gradient family and preconditions") {
    // same gaussian product, p = 1: nu_{0,3} * 4 pi Int r^2 e^{-r^2} dr
    //                             = nu_{0,3} * pi^{3/2} = 4 sqrt(pi) / 3
    const HomogeneousKernelSpec grad(0.0, 3, KernelFamily::gradient);
    const WeightDescriptor a = WeightDescriptor::gaussian(0.5);
    const ModelWeightProfile profile(2, {{0.5, 1.0}});
    CHECK(model_coefficient(grad, a, profile) ==
          doctest::Approx(4.0 * std::sqrt(M_PI) / 3.0).epsilon(1e-9));

    CHECK_THROWS_AS(model_coefficient(HomogeneousKernelSpec(1.0, 1), a, profile),
                    std::invalid_argument);
    RadialGrid empty;
    CHECK_THROWS_AS(model_coefficient(HomogeneousKernelSpec(1.0, 3), a, profile, empty),
                    std::invalid_argument);
    CHECK_THROWS_AS(model_coefficient(HomogeneousKernelSpec(1.0, 3), a, profile,
                                      RadialGrid::gauss(4, 18.0)),
                    UnderResolvedGrid);
}

TEST_CASE("nystrom probe: validation") {
    const auto kernel = [](double x, double y) { return std::exp(-(x - y) * (x - y)); };
    const WeightDescriptor w = WeightDescriptor::gaussian(1.0);
    CHECK_THROWS_AS(nystrom_1d_kernel_spectrum(kernel, w, w, 32, 6.0), std::invalid_argument);
    CHECK_THROWS_AS(nystrom_1d_kernel_spectrum(kernel, w, w, 128, 0.0), std::invalid_argument);
    NystromOptions bad;
    bad.panel_order = 0;
    CHECK_THROWS_AS(nystrom_1d_kernel_spectrum(kernel, w, w, 128, 6.0, bad),
                    std::invalid_argument);
    bad.panel_order = 8;
    bad.grading = -1.0;
    CHECK_THROWS_AS(nystrom_1d_kernel_spectrum(kernel, w, w, 128, 6.0, bad),
                    std::invalid_argument);

    CHECK_THROWS_AS(nystrom_1d_spectrum(HomogeneousKernelSpec(1.0, 3), 128, 6.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        nystrom_1d_spectrum(HomogeneousKernelSpec(1.0, 1, KernelFamily::gradient), 128, 6.0),
        std::invalid_argument);
    CHECK_THROWS_AS(nystrom_1d_spectrum(HomogeneousKernelSpec(-0.7, 1), 128, 6.0),
                    std::invalid_argument);
}

TEST_CASE("nystrom probe: constant kernel is rank one with computable norm") {
    // alpha = 0 keeps K = 1 on and off the diagonal, so the weighted operator
    // is (b sqrt(w)) (a sqrt(w))^T; with both weights e^{-x^2} its only
    // singular value is Int e^{-2x^2} dx = sqrt(pi/2)
    HomogeneousKernelSpec spec(0.0, 1, KernelFamily::scalar_abs,
                               WeightDescriptor::gaussian(1.0), WeightDescriptor::gaussian(1.0));
    const SpectrumSeries series = nystrom_1d_spectrum(spec, 256, 8.0);
    CHECK(series.expanded.at(0) == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-10));
    CHECK(series.expanded.at(1) / series.expanded.at(0) < 1e-12);
}

TEST_CASE("nystrom probe: swapping the weights preserves singular values") {
    const auto kernel = [](double x, double y) { return std::exp(-(x - y) * (x - y)); };
    const WeightDescriptor a = WeightDescriptor::gaussian(0.7, 0.3);
    const WeightDescriptor b = WeightDescriptor::gaussian(1.3, -0.2);
    const SpectrumSeries ab = nystrom_1d_kernel_spectrum(kernel, a, b, 160, 6.0);
    const SpectrumSeries ba = nystrom_1d_kernel_spectrum(kernel, b, a, 160, 6.0);
    for (int k = 0; k < 10; ++k)
        CHECK(ab.expanded[k] ==
              doctest::Approx(ba.expanded[k]).epsilon(1e-10).scale(ab.expanded[0]));
}

TEST_CASE("nystrom probe: weight outside the interval kills the operator") {
    const auto kernel = [](double x, double y) { return std::abs(x - y); };
    const WeightDescriptor far = WeightDescriptor::bump(0.5, 100.0);
    const WeightDescriptor near = WeightDescriptor::gaussian(1.0);
    const SpectrumSeries series = nystrom_1d_kernel_spectrum(kernel, far, near, 128, 6.0);
    CHECK(series.expanded.at(0) == 0.0);
}

TEST_CASE("nystrom probe: analytic kernels collapse, homogeneous kernels do not") {
    const auto smooth = [](double x, double y) { return std::exp(-(x - y) * (x - y)); };
    const WeightDescriptor w = WeightDescriptor::gaussian(1.0);
    NystromOptions opt;
    opt.refine = true;
    const SpectrumSeries collapsing = nystrom_1d_kernel_spectrum(smooth, w, w, 256, 6.0, opt);
    CHECK(collapsing.expanded.at(59) < 1e-12 * collapsing.expanded.at(0));
    CHECK(collapsing.trust_k >= 10);
    CHECK(collapsing.trust_k <= collapsing.expanded.size());

    // |x - y| decays like k^{-2}: at rank 60 it is nowhere near collapsed
    const SpectrumSeries algebraic =
        nystrom_1d_spectrum(HomogeneousKernelSpec(1.0, 1, KernelFamily::scalar_abs, w, w), 256,
                            6.0);
    CHECK(algebraic.expanded.at(59) > 1e-8 * algebraic.expanded.at(0));
}

TEST_CASE("nystrom probe: line-kernel scaled spectrum approaches 2/pi") {
    // reduced-size version of the headline decay-law check for |x - y|;
    // the half-resolution trust index grows like n/16, so n = 1536 certifies
    // the whole [20, 80] window (measured trust 94, median deviation ~3%)
    HomogeneousKernelSpec spec(1.0, 1, KernelFamily::scalar_abs,
                               WeightDescriptor::gaussian(1.0), WeightDescriptor::gaussian(1.0));
    NystromOptions opt;
    opt.refine = true;
    const SpectrumSeries series = nystrom_1d_spectrum(spec, 1536, 6.0, opt);
    REQUIRE(series.expanded.size() >= 80);
    CHECK(series.trust_k >= 80);

    const PlateauEstimate est = plateau_estimate(series, 0.5, 20, 80);
    CHECK(std::abs(est.scaled_median - 2.0 / M_PI) / (2.0 / M_PI) < 0.15);
    CHECK(est.scaled_min <= est.scaled_median);
    CHECK(est.scaled_median <= est.scaled_max);
}

}  // TEST_SUITE
