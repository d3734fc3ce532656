#pragma once

#include <array>

#include "cusplab/quadrature.hpp"

namespace cusplab {

using Vec3 = std::array<double, 3>;

enum class Symmetry { symmetric, antisymmetric };

// Two-particle state with an explicit inter-particle cusp,
//
//   symmetric:      psi(t, x) = e^{-zeta(|t|+|x|)} (1 + c |t-x|)
//   antisymmetric:  psi(t, x) = (|t|-|x|) e^{-zeta(|t|+|x|)} (1 + c |t-x|)
//
// exposed together with its decomposition psi = xi + |t-x| eta into a smooth
// part and a cusp amplitude. The family is rotation invariant, so everything
// is also available as a function of (rho, r, u) with rho = |t|, r = |x| and
// u the cosine of the angle between t and x.
class CuspState {
public:
    CuspState(double zeta, double c, Symmetry symmetry);

    double zeta() const { return zeta_; }
    double c() const { return c_; }
    Symmetry symmetry() const { return symmetry_; }

    // Conservative decay rate, stored with a 0.9 safety factor that absorbs
    // bounded prefactors: 0.9 * 2 zeta for symmetric states (the rate of the
    // diagonal profile e^{-2 zeta r} at |t| = |x| = r) and 0.9 * zeta for
    // antisymmetric ones. A uniform bound |psi| <= C e^{-0.9 zeta (|t|+|x|)}
    // holds for both symmetries; the faster symmetric rate is diagonal-only.
    double kappa0() const { return kappa0_; }

    // Radial forms. s = sqrt(rho^2 + r^2 - 2 rho r u) is the separation |t-x|.
    double psi(double rho, double r, double u) const;
    double xi(double rho, double r, double u) const;
    double eta(double rho, double r, double u) const;

    // Cartesian forms.
    double psi(const Vec3& t, const Vec3& x) const;
    double xi(const Vec3& t, const Vec3& x) const;
    double eta(const Vec3& t, const Vec3& x) const;

private:
    double zeta_;
    double c_;
    double kappa0_;
    Symmetry symmetry_;
};

double evaluate_psi(const CuspState& state, const Vec3& t, const Vec3& x);

// Rotation-invariant cusp strength on the diagonal, H(r) = amplitude * e^{-rate r}:
// sqrt(2)|c| e^{-2 zeta r} for symmetric states, identically zero for
// antisymmetric ones (their cusp amplitude vanishes on the diagonal).
struct DiagonalProfile {
    double amplitude = 0.0;
    double rate = 0.0;

    double operator()(double r) const;
};

DiagonalProfile diagonal_profile(const CuspState& state);

// Spectral decay coefficient A = (1/3)(2/pi)^{5/4} * 4 pi * Int r^2 H(r)^{3/4} dr
// by radial quadrature. Requires zeta * grid.r_max >= 10 so the integrand's
// tail is inside the grid; reports UnderResolvedGrid when doubling the node
// count moves the result by more than 1e-8 relative.
double coefficient_A(const CuspState& state, const RadialGrid& grid);

// Same quantity in closed form: (1/3)(2/pi)^{5/4} (sqrt(2)|c|)^{3/4} * 64 pi/(27 zeta^3)
// for symmetric states, 0 for antisymmetric ones.
double coefficient_A_closed(const CuspState& state);

// Radial grid tuned for coefficient_A: r_max = 20/zeta keeps the truncation
// error of Int r^2 e^{-(3/2) zeta r} dr below 1e-10 relative.
RadialGrid coefficient_grid(double zeta, int n = 320);

// Radial grid for the density-operator pipeline: r_max = 14/zeta.
RadialGrid density_grid(double zeta, int n = 320);

}  // namespace cusplab
