#pragma once

#include <functional>
#include <vector>

#include "cusplab/density.hpp"
#include "cusplab/quadrature.hpp"

namespace cusplab {

// Smooth weight factor used on either side of a kernel.
struct WeightDescriptor {
    enum class Shape { gaussian, bump };

    Shape shape = Shape::gaussian;
    double sigma = 1.0;   // gaussian: e^{-sigma (x-center)^2}
    double center = 0.0;
    double radius = 1.0;  // bump: support [center - radius, center + radius]

    double operator()(double x) const;

    static WeightDescriptor gaussian(double sigma, double center = 0.0);
    static WeightDescriptor bump(double radius, double center = 0.0);
};

enum class KernelFamily {
    scalar_abs,  // Phi(x) = |x|^alpha
    gradient     // Phi(x) = (alpha+1)|x|^{alpha-1} x, magnitude conventions below
};

// Convolution kernel Phi(x - y) homogeneous of order alpha on R^d, with the
// weights that multiply it on each side.
struct HomogeneousKernelSpec {
    double alpha;
    int d;
    KernelFamily family = KernelFamily::scalar_abs;
    WeightDescriptor a;  // right weight
    WeightDescriptor b;  // left weight

    HomogeneousKernelSpec(double alpha, int d, KernelFamily family = KernelFamily::scalar_abs,
                          WeightDescriptor a = {}, WeightDescriptor b = {});

    // Eigenvalue-law exponent, 1/p = 1 + alpha/d.
    double p() const;
    // Homogeneity order of the Fourier symbol: -(alpha + d).
    double symbol_order() const { return -(alpha + d); }
    // True when the symbol vanishes identically: alpha in {0, 2, 4, ...} for
    // the scalar family, alpha in {1, 3, 5, ...} for the gradient family.
    bool degenerate() const;
};

// Fourier symbol at |xi| = xi_norm. Scalar family (signed):
//   2^{d+alpha} pi^{d/2} Gamma((d+alpha)/2) / Gamma(-alpha/2) * xi^{-(d+alpha)}
// gradient family returns the magnitude of the vector symbol:
//   (alpha+1) 2^{d+alpha} pi^{d/2} |Gamma((d+alpha+1)/2) / Gamma((1-alpha)/2)| * xi^{-(d+alpha)}
// Degenerate branches return exactly 0.
double fourier_symbol(const HomogeneousKernelSpec& spec, double xi_norm);

// Spectral constants of the eigenvalue law, with p from 1/p = 1 + alpha/d:
//   mu_{alpha,d} = [Gamma((d+alpha)/2) / (pi^{alpha/2} |Gamma(-alpha/2)|)]^p / Gamma(d/2 + 1)
//   nu_{alpha,d} = [(alpha+1) Gamma((d+alpha+1)/2) / (pi^{alpha/2} |Gamma((1-alpha)/2)|)]^p / Gamma(d/2 + 1)
// Degenerate branches are exactly 0.
double mu_coefficient(double alpha, int d);
double nu_coefficient(double alpha, int d);

// Surface area of the unit sphere S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
double sphere_area(int d);

// Gaussian factor of a many-particle model state. One component contributes
//   prefactor * e^{-2 sigma_t r^2},  prefactor = (pi / (2 sigma_y))^{3(N-2)/2}
// to h(r)^2 (prefactor 1 when N = 2): the L^2 mass over the 3(N-2) spectator
// coordinates of e^{-sigma_y |spectators|^2 - sigma_t |t|^2}.
struct GaussianComponent {
    double sigma_t = 1.0;
    double sigma_y = 1.0;
};

// Sum of Gaussian components; an empty component list represents h identically 0.
class ModelWeightProfile {
public:
    ModelWeightProfile(int particle_count, std::vector<GaussianComponent> components);

    int particle_count() const { return particle_count_; }
    const std::vector<GaussianComponent>& components() const { return components_; }

    double h(double r) const;
    double h_squared(double r) const;

    // h(r) < tol for all r beyond this radius.
    double effective_radius(double tol = 1e-12) const;

private:
    int particle_count_;
    std::vector<GaussianComponent> components_;
};

// Spectral coefficient of the weighted model operator on R^3:
//   (mu or nu)_{alpha,3} * 4 pi Int r^2 |a(r) h(r)|^p dr
// by radial quadrature; reports UnderResolvedGrid on a doubling shift
// above 1e-8 relative.
double model_coefficient(const HomogeneousKernelSpec& spec, const WeightDescriptor& a,
                         const ModelWeightProfile& profile,
                         const RadialGrid& grid = RadialGrid::gauss());

struct NystromOptions {
    int panel_order = 8;
    double grading = 3.0;  // sinh grading of panel edges; 0 gives uniform panels
    bool refine = false;   // half-resolution re-run to measure trust_k
};

// Singular values of [sqrt(w_i) b(x_i) K(x_i, x_j) a(x_j) sqrt(w_j)] on a
// composite Gauss-Legendre rule over [-half_width, half_width], descending.
// The requested n is rounded up to a whole number of panels. No noise floor
// is applied: tiny tail values are part of what this probe measures.
SpectrumSeries nystrom_1d_kernel_spectrum(const std::function<double(double, double)>& kernel,
                                          const WeightDescriptor& a, const WeightDescriptor& b,
                                          int n, double half_width,
                                          const NystromOptions& options = {});

// Same with K(x, y) = |x - y|^alpha from the spec (d = 1, scalar family,
// alpha > -1/2); the weights are taken from the spec.
SpectrumSeries nystrom_1d_spectrum(const HomogeneousKernelSpec& spec, int n, double half_width,
                                   const NystromOptions& options = {});

}  // namespace cusplab
