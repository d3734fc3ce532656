#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "cusplab/cusp_state.hpp"
#include "cusplab/quadrature.hpp"

namespace cusplab {

// 2 pi * Int_{-1}^{1} P_l(u) f(u) du with a u_order-point Gauss-Legendre rule.
double angular_projection(int l, int u_order, const std::function<double(double)>& f);

// Partial-wave amplitude a_l(rho, r) = 2 pi * Int_{-1}^{1} P_l(u) psi(rho, r, u) du.
// Rejects u_order <= l (the rule cannot separate P_l from lower channels);
// u_order >= l + 10 is recommended for cusped integrands.
double partial_wave_amplitude(const CuspState& state, int l, double rho, double r, int u_order);

// Amplitudes for all channels l = 0..l_max on grid x grid;
// table[l](i, j) = a_l(nodes[i], nodes[j]). Exploits a_l(rho, r) = +-a_l(r, rho).
std::vector<Eigen::MatrixXd> amplitude_table(const CuspState& state, int l_max,
                                             const RadialGrid& grid, int u_order);

// Fixed-angular-momentum block of the density operator.
struct ChannelOperator {
    int ell = 0;
    Eigen::MatrixXd amplitude_matrix;  // sqrt(2) * a_l(rho_i, r_j) on grid x grid
};

ChannelOperator channel_operator(const CuspState& state, int ell, const RadialGrid& grid,
                                 int u_order = 0);  // u_order 0 resolves to ell + 16

// Symmetrically square-root-weighted matrix whose squared singular values are
// the channel eigenvalues: M[i,j] = sqrt(w_i rho_i^2) * amplitude(i,j) * sqrt(w_j r_j^2).
// The rho- and r-axis grids must be identical; a mismatch is rejected.
Eigen::MatrixXd channel_matrix(const ChannelOperator& channel, const RadialGrid& rho_grid,
                               const RadialGrid& r_grid);

// Descending eigenvalues of one channel, computed as squared singular values.
std::vector<double> channel_spectrum(const ChannelOperator& channel, const RadialGrid& grid);
std::vector<double> channel_spectrum(const CuspState& state, int ell, const RadialGrid& grid,
                                     int u_order = 0);

struct SpectrumEntry {
    double value = 0.0;
    int multiplicity = 1;
    int channel = 0;
};

struct SpectrumSeries {
    // Distinct levels, sorted by (value descending, channel ascending).
    std::vector<SpectrumEntry> entries;
    // Levels repeated by multiplicity; expanded[k-1] is the k-th eigenvalue.
    std::vector<double> expanded;
    std::vector<int> expanded_channel;
    // Largest rank whose leading run agrees with a half-resolution re-run
    // within 5%; equals expanded.size() when no refinement was performed.
    std::size_t trust_k = 0;
    std::vector<std::string> warnings;

    double sum() const;  // sum of value * multiplicity
};

// Merge per-channel eigenvalue lists; channel l carries multiplicity 2l+1.
// Values below floor_ratio * (largest value) are quadrature noise and are
// dropped; tiny negatives are clamped to zero first.
SpectrumSeries merge_channels(const std::vector<std::vector<double>>& per_channel,
                              double floor_ratio = 1e-13);

struct AssembleOptions {
    int l_max = 48;
    int u_order = 0;      // 0 resolves to l_max + 16
    bool refine = true;   // half-resolution re-run to measure trust_k
    bool parallel = true; // channels are independent; output is scheduling-invariant
};

// Full spectrum of the one-particle density operator: channel spectra merged
// with multiplicities, trust index from a half-resolution re-run, and a
// warning when the top channel still contributes above 1e-10 * lambda_1.
SpectrumSeries assemble_spectrum(const CuspState& state, const RadialGrid& grid,
                                 const AssembleOptions& options = {});

// Trace of the density operator, 2 ||psi||^2, by direct radial quadrature with
// the angular integral in closed form. Independent of the partial-wave
// pipeline; reports UnderResolvedGrid on a doubling shift above 1e-8 relative.
double trace_sum(const CuspState& state, const RadialGrid& grid);

}  // namespace cusplab
