#include "cusplab/cusp_state.hpp"

#include <cmath>

namespace cusplab {

namespace {

double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

double separation(const Vec3& t, const Vec3& x) {
    const Vec3 d{t[0] - x[0], t[1] - x[1], t[2] - x[2]};
    return norm3(d);
}

double separation(double rho, double r, double u) {
    const double s2 = rho * rho + r * r - 2.0 * rho * r * u;
    return std::sqrt(s2 > 0.0 ? s2 : 0.0);
}

constexpr double kMu13 = 0.18955223039866365;  // (1/3)(2/pi)^{5/4}

}  // namespace

CuspState::CuspState(double zeta, double c, Symmetry symmetry)
    : zeta_(zeta), c_(c), symmetry_(symmetry) {
    if (!(zeta > 0.0)) throw std::invalid_argument("CuspState: zeta must be > 0");
    if (!std::isfinite(c)) throw std::invalid_argument("CuspState: c must be finite");
    kappa0_ = symmetry == Symmetry::symmetric ? 0.9 * 2.0 * zeta : 0.9 * zeta;
}

double CuspState::xi(double rho, double r, double u) const {
    (void)u;
    const double base = std::exp(-zeta_ * (rho + r));
    return symmetry_ == Symmetry::symmetric ? base : (rho - r) * base;
}

double CuspState::eta(double rho, double r, double u) const {
    (void)u;
    const double base = c_ * std::exp(-zeta_ * (rho + r));
    return symmetry_ == Symmetry::symmetric ? base : (rho - r) * base;
}

double CuspState::psi(double rho, double r, double u) const {
    // combined closed form; the xi + s*eta identity is a checked invariant,
    // not the definition
    const double s = separation(rho, r, u);
    const double base = std::exp(-zeta_ * (rho + r)) * (1.0 + c_ * s);
    return symmetry_ == Symmetry::symmetric ? base : (rho - r) * base;
}

double CuspState::psi(const Vec3& t, const Vec3& x) const {
    const double rho = norm3(t), r = norm3(x), s = separation(t, x);
    const double base = std::exp(-zeta_ * (rho + r)) * (1.0 + c_ * s);
    return symmetry_ == Symmetry::symmetric ? base : (rho - r) * base;
}

double CuspState::xi(const Vec3& t, const Vec3& x) const {
    const double rho = norm3(t), r = norm3(x);
    const double base = std::exp(-zeta_ * (rho + r));
    return symmetry_ == Symmetry::symmetric ? base : (rho - r) * base;
}

double CuspState::eta(const Vec3& t, const Vec3& x) const {
    const double rho = norm3(t), r = norm3(x);
    const double base = c_ * std::exp(-zeta_ * (rho + r));
    return symmetry_ == Symmetry::symmetric ? base : (rho - r) * base;
}

double evaluate_psi(const CuspState& state, const Vec3& t, const Vec3& x) {
    return state.psi(t, x);
}

double DiagonalProfile::operator()(double r) const {
    return amplitude * std::exp(-rate * r);
}

DiagonalProfile diagonal_profile(const CuspState& state) {
    DiagonalProfile p;
    p.rate = 2.0 * state.zeta();
    p.amplitude = state.symmetry() == Symmetry::symmetric ? std::sqrt(2.0) * std::abs(state.c()) : 0.0;
    return p;
}

namespace {

double coefficient_quadrature(const DiagonalProfile& profile, const RadialGrid& grid) {
    double integral = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid.nodes[i];
        integral += grid.weights[i] * r * r * std::pow(profile(r), 0.75);
    }
    return kMu13 * 4.0 * M_PI * integral;
}

}  // namespace

double coefficient_A(const CuspState& state, const RadialGrid& grid) {
    if (grid.size() == 0) throw std::invalid_argument("coefficient_A: empty grid");
    if (state.zeta() * grid.r_max < 10.0)
        throw std::invalid_argument("coefficient_A: grid.r_max must be >= 10/zeta to resolve the tail");

    const DiagonalProfile profile = diagonal_profile(state);
    const double coarse = coefficient_quadrature(profile, grid);
    const RadialGrid refined = RadialGrid::gauss(static_cast<int>(grid.size()) * 2, grid.r_max);
    const double fine = coefficient_quadrature(profile, refined);
    if (std::abs(coarse - fine) > 1e-8 * std::max(1e-300, std::abs(fine)) &&
        std::abs(coarse - fine) > 1e-14)
        throw UnderResolvedGrid("coefficient_A: doubling the grid moved the result by more than 1e-8 relative",
                                coarse, fine);
    return coarse;
}

double coefficient_A_closed(const CuspState& state) {
    if (state.symmetry() == Symmetry::antisymmetric) return 0.0;
    const double z = state.zeta();
    return kMu13 * std::pow(std::sqrt(2.0) * std::abs(state.c()), 0.75) * (64.0 * M_PI / 27.0) / (z * z * z);
}

RadialGrid coefficient_grid(double zeta, int n) {
    if (!(zeta > 0.0)) throw std::invalid_argument("coefficient_grid: zeta must be > 0");
    return RadialGrid::gauss(n, 20.0 / zeta);
}

RadialGrid density_grid(double zeta, int n) {
    if (!(zeta > 0.0)) throw std::invalid_argument("density_grid: zeta must be > 0");
    return RadialGrid::gauss(n, 14.0 / zeta);
}

}  // namespace cusplab
