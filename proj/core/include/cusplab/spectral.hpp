#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cusplab/density.hpp"

namespace cusplab {

// Number of values (with multiplicity) strictly greater than s.
std::size_t counting_function(const std::vector<double>& expanded, double s);
std::size_t counting_function(const SpectrumSeries& series, double s);

// Windowed surrogate for the limit coefficients of a power-law tail: when
// s_k ~ B k^{-1/p}, the scaled values k^{1/p} s_k plateau at B, and the g/G
// estimates recover B^p, the liminf/limsup coefficients of s^p n(s).
struct PlateauEstimate {
    double p = 0.0;
    std::size_t k_lo = 0;
    std::size_t k_hi = 0;
    double scaled_median = 0.0;  // median of k^{1/p} s_k over the window
    double scaled_min = 0.0;
    double scaled_max = 0.0;
    double g_estimate = 0.0;  // scaled_min^p
    double G_estimate = 0.0;  // scaled_max^p
};

// Window is 1-based and inclusive; k_hi is clipped to the sequence length.
PlateauEstimate plateau_estimate(const std::vector<double>& expanded, double p,
                                 std::size_t k_lo, std::size_t k_hi);
// SpectrumSeries overload additionally enforces k_hi <= trust_k.
PlateauEstimate plateau_estimate(const SpectrumSeries& series, double p, std::size_t k_lo,
                                 std::size_t k_hi);

// sup_k k^{1/p} s_k; 0 for an empty sequence.
double quasi_norm(const std::vector<double>& expanded, double p);
double quasi_norm(const SpectrumSeries& series, double p);

// Finite-matrix checks of the operator-ideal identities on pseudo-random
// Gaussian matrices (std::mt19937_64 seeded as given, N(0,1) entries):
//   - eigenvalues of T^T T equal the squared singular values of T (1e-10 rel);
//   - nonzero spectra of T^T T and T T^T coincide (1e-10 rel);
//   - quasi-norm triangle inequality at exponent p/(p+1).
struct IdentityReport {
    std::uint64_t seed = 0;
    int size = 0;
    double p = 0.0;
    double max_spectral_mismatch = 0.0;   // eig(T^T T) vs svd(T)^2
    double max_crossover_mismatch = 0.0;  // eig(T^T T) vs eig(T T^T)
    double triangle_slack = 0.0;          // rhs - lhs of the triangle inequality
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

IdentityReport finite_matrix_identities(std::uint64_t seed, int size, double p);

}  // namespace cusplab
