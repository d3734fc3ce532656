#include "cusplab/homokernel.hpp"

#include <cmath>

namespace cusplab {

namespace {

bool is_nonneg_even_integer(double x) {
    const double r = std::round(x);
    return x == r && r >= 0.0 && static_cast<long long>(r) % 2 == 0;
}

bool is_positive_odd_integer(double x) {
    const double r = std::round(x);
    return x == r && r >= 1.0 && static_cast<long long>(r) % 2 == 1;
}

}  // namespace

double WeightDescriptor::operator()(double x) const {
    const double u = x - center;
    if (shape == Shape::gaussian) return std::exp(-sigma * u * u);
    const double t = u / radius;
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));  // mollifier, equals 1 at the center
}

WeightDescriptor WeightDescriptor::gaussian(double sigma, double center) {
    if (!(sigma > 0.0)) throw std::invalid_argument("WeightDescriptor: sigma must be > 0");
    WeightDescriptor w;
    w.shape = Shape::gaussian;
    w.sigma = sigma;
    w.center = center;
    return w;
}

WeightDescriptor WeightDescriptor::bump(double radius, double center) {
    if (!(radius > 0.0)) throw std::invalid_argument("WeightDescriptor: radius must be > 0");
    WeightDescriptor w;
    w.shape = Shape::bump;
    w.radius = radius;
    w.center = center;
    return w;
}

HomogeneousKernelSpec::HomogeneousKernelSpec(double alpha_, int d_, KernelFamily family_,
                                             WeightDescriptor a_, WeightDescriptor b_)
    : alpha(alpha_), d(d_), family(family_), a(a_), b(b_) {
    if (d < 1 || d > 3) throw std::invalid_argument("HomogeneousKernelSpec: d must be 1, 2 or 3");
    if (!(alpha > -d))
        throw std::invalid_argument("HomogeneousKernelSpec: alpha must be > -d for integrability");
}

double HomogeneousKernelSpec::p() const { return static_cast<double>(d) / (d + alpha); }

bool HomogeneousKernelSpec::degenerate() const {
    return family == KernelFamily::scalar_abs ? is_nonneg_even_integer(alpha)
                                              : is_positive_odd_integer(alpha);
}

double fourier_symbol(const HomogeneousKernelSpec& spec, double xi_norm) {
    if (!(xi_norm > 0.0)) throw std::invalid_argument("fourier_symbol: xi_norm must be > 0");
    if (spec.degenerate()) return 0.0;

    const double a = spec.alpha;
    const int d = spec.d;
    double value;
    if (spec.family == KernelFamily::scalar_abs) {
        value = std::pow(2.0, d + a) * std::pow(M_PI, d / 2.0) *
                std::tgamma((d + a) / 2.0) / std::tgamma(-a / 2.0);
    } else {
        value = (a + 1.0) * std::pow(2.0, d + a) * std::pow(M_PI, d / 2.0) *
                std::abs(std::tgamma((d + a + 1.0) / 2.0) / std::tgamma((1.0 - a) / 2.0));
    }
    if (!std::isfinite(value))
        throw std::domain_error("fourier_symbol: gamma-function pole in a nondegenerate branch");
    return value * std::pow(xi_norm, -(a + d));
}

double mu_coefficient(double alpha, int d) {
    if (d < 1) throw std::invalid_argument("mu_coefficient: d must be >= 1");
    if (!(alpha > -d)) throw std::invalid_argument("mu_coefficient: alpha must be > -d");
    if (is_nonneg_even_integer(alpha)) return 0.0;
    const double p = static_cast<double>(d) / (d + alpha);
    const double core = std::tgamma((d + alpha) / 2.0) /
                        (std::pow(M_PI, alpha / 2.0) * std::abs(std::tgamma(-alpha / 2.0)));
    return std::pow(core, p) / std::tgamma(d / 2.0 + 1.0);
}

double nu_coefficient(double alpha, int d) {
    if (d < 1) throw std::invalid_argument("nu_coefficient: d must be >= 1");
    if (!(alpha > -d)) throw std::invalid_argument("nu_coefficient: alpha must be > -d");
    if (is_positive_odd_integer(alpha)) return 0.0;
    const double p = static_cast<double>(d) / (d + alpha);
    const double core = (alpha + 1.0) * std::tgamma((d + alpha + 1.0) / 2.0) /
                        (std::pow(M_PI, alpha / 2.0) * std::abs(std::tgamma((1.0 - alpha) / 2.0)));
    return std::pow(std::abs(core), p) / std::tgamma(d / 2.0 + 1.0);
}

double sphere_area(int d) {
    if (d < 1) throw std::invalid_argument("sphere_area: d must be >= 1");
    return 2.0 * std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0);
}

ModelWeightProfile::ModelWeightProfile(int particle_count, std::vector<GaussianComponent> components)
    : particle_count_(particle_count), components_(std::move(components)) {
    if (particle_count_ < 2)
        throw std::invalid_argument("ModelWeightProfile: particle_count must be >= 2");
    // An empty component list is allowed and represents h identically zero.
    for (const GaussianComponent& g : components_)
        if (!(g.sigma_t > 0.0) || !(g.sigma_y > 0.0))
            throw std::invalid_argument("ModelWeightProfile: component rates must be > 0");
}

double ModelWeightProfile::h_squared(double r) const {
    const double spectator_dim = 3.0 * (particle_count_ - 2);
    double acc = 0.0;
    for (const GaussianComponent& g : components_) {
        const double pref =
            particle_count_ == 2 ? 1.0 : std::pow(M_PI / (2.0 * g.sigma_y), spectator_dim / 2.0);
        acc += pref * std::exp(-2.0 * g.sigma_t * r * r);
    }
    return acc;
}

double ModelWeightProfile::h(double r) const { return std::sqrt(h_squared(r)); }

double ModelWeightProfile::effective_radius(double tol) const {
    if (!(tol > 0.0)) throw std::invalid_argument("effective_radius: tol must be > 0");
    const double spectator_dim = 3.0 * (particle_count_ - 2);
    const double n = static_cast<double>(components_.size());
    double radius = 0.0;
    for (const GaussianComponent& g : components_) {
        const double pref =
            particle_count_ == 2 ? 1.0 : std::pow(M_PI / (2.0 * g.sigma_y), spectator_dim / 2.0);
        // component term below tol^2 / n beyond this radius, so h^2 < tol^2
        const double arg = std::log(n * pref / (tol * tol));
        if (arg > 0.0) radius = std::max(radius, std::sqrt(arg / (2.0 * g.sigma_t)));
    }
    return radius;
}

namespace {

double model_integral(const HomogeneousKernelSpec& spec, const WeightDescriptor& a,
                      const ModelWeightProfile& profile, const RadialGrid& grid) {
    const double p = spec.p();
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.nodes[i];
        acc += grid.weights[i] * r * r * std::pow(std::abs(a(r) * profile.h(r)), p);
    }
    return 4.0 * M_PI * acc;
}

}  // namespace

double model_coefficient(const HomogeneousKernelSpec& spec, const WeightDescriptor& a,
                         const ModelWeightProfile& profile, const RadialGrid& grid) {
    if (spec.d != 3)
        throw std::invalid_argument("model_coefficient: the model form is defined for d = 3");
    if (grid.size() == 0) throw std::invalid_argument("model_coefficient: empty grid");

    const double coeff = spec.family == KernelFamily::scalar_abs ? mu_coefficient(spec.alpha, 3)
                                                                 : nu_coefficient(spec.alpha, 3);
    const double coarse = model_integral(spec, a, profile, grid);
    const double fine = model_integral(spec, a, profile,
                                       RadialGrid::gauss(static_cast<int>(grid.size()) * 2, grid.r_max));
    if (std::abs(coarse - fine) > 1e-8 * std::max(1e-300, std::abs(fine)) &&
        std::abs(coarse - fine) > 1e-14)
        throw UnderResolvedGrid("model_coefficient: doubling the grid moved the result by more than 1e-8 relative",
                                coarse, fine);
    return coeff * coarse;
}

namespace {

SpectrumSeries nystrom_run(const std::function<double(double, double)>& kernel,
                           const WeightDescriptor& a, const WeightDescriptor& b, int n,
                           double half_width, const NystromOptions& options) {
    const int panels = (n + options.panel_order - 1) / options.panel_order;
    const Quadrature q = composite_gauss(panels, options.panel_order, half_width, options.grading);
    const int m = static_cast<int>(q.size());

    Eigen::VectorXd sw(m), av(m), bv(m);
    for (int i = 0; i < m; ++i) {
        sw[i] = std::sqrt(q.weights[i]);
        av[i] = a(q.nodes[i]);
        bv[i] = b(q.nodes[i]);
    }
    Eigen::MatrixXd mat(m, m);
    for (int i = 0; i < m; ++i) {
        const double row = sw[i] * bv[i];
        for (int j = 0; j < m; ++j)
            mat(i, j) = row * kernel(q.nodes[i], q.nodes[j]) * av[j] * sw[j];
    }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(mat);
    const Eigen::VectorXd& sv = svd.singularValues();

    SpectrumSeries series;
    series.entries.reserve(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        series.entries.push_back({sv[i], 1, 0});
        series.expanded.push_back(sv[i]);
        series.expanded_channel.push_back(0);
    }
    series.trust_k = series.expanded.size();
    return series;
}

}  // namespace

SpectrumSeries nystrom_1d_kernel_spectrum(const std::function<double(double, double)>& kernel,
                                          const WeightDescriptor& a, const WeightDescriptor& b,
                                          int n, double half_width, const NystromOptions& options) {
    if (n < 64)
        throw std::invalid_argument("nystrom_1d_kernel_spectrum: n must be >= 64 (smaller grids cannot express the asymptotics)");
    if (!(half_width > 0.0))
        throw std::invalid_argument("nystrom_1d_kernel_spectrum: half_width must be > 0");
    if (options.panel_order < 1 || options.grading < 0.0)
        throw std::invalid_argument("nystrom_1d_kernel_spectrum: invalid panel options");

    SpectrumSeries series = nystrom_run(kernel, a, b, n, half_width, options);
    if (options.refine && n >= 128) {
        const SpectrumSeries coarse = nystrom_run(kernel, a, b, n / 2, half_width, options);
        const std::size_t m = std::min(series.expanded.size(), coarse.expanded.size());
        std::size_t k = 0;
        while (k < m &&
               std::abs(series.expanded[k] - coarse.expanded[k]) <= 0.05 * series.expanded[k])
            ++k;
        series.trust_k = k;
    }
    return series;
}

SpectrumSeries nystrom_1d_spectrum(const HomogeneousKernelSpec& spec, int n, double half_width,
                                   const NystromOptions& options) {
    if (spec.d != 1)
        throw std::invalid_argument("nystrom_1d_spectrum: the line check requires d = 1");
    if (spec.family != KernelFamily::scalar_abs)
        throw std::invalid_argument("nystrom_1d_spectrum: only the scalar family has a pointwise kernel");
    if (!(spec.alpha > -0.5))
        throw std::invalid_argument("nystrom_1d_spectrum: alpha must be > -1/2");

    const double alpha = spec.alpha;
    auto kernel = [alpha](double x, double y) {
        if (x == y) return alpha == 0.0 ? 1.0 : 0.0;  // |0|^alpha, ignoring the
                                                      // weak singularity for alpha < 0
        return std::pow(std::abs(x - y), alpha);
    };
    return nystrom_1d_kernel_spectrum(kernel, spec.a, spec.b, n, half_width, options);
}

}  // namespace cusplab
