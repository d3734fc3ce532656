#include "cusplab/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace cusplab {

std::size_t counting_function(const std::vector<double>& expanded, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("counting_function: s must be > 0");
    return static_cast<std::size_t>(
        std::count_if(expanded.begin(), expanded.end(), [s](double v) { return v > s; }));
}

std::size_t counting_function(const SpectrumSeries& series, double s) {
    return counting_function(series.expanded, s);
}

PlateauEstimate plateau_estimate(const std::vector<double>& expanded, double p,
                                 std::size_t k_lo, std::size_t k_hi) {
    if (!(p > 0.0)) throw std::invalid_argument("plateau_estimate: p must be > 0");
    if (k_lo < 1) throw std::invalid_argument("plateau_estimate: k_lo must be >= 1");
    k_hi = std::min(k_hi, expanded.size());
    if (k_hi < k_lo) throw std::invalid_argument("plateau_estimate: empty window");

    std::vector<double> scaled;
    scaled.reserve(k_hi - k_lo + 1);
    for (std::size_t k = k_lo; k <= k_hi; ++k)
        scaled.push_back(std::pow(static_cast<double>(k), 1.0 / p) * expanded[k - 1]);

    std::vector<double> sorted = scaled;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    const double median = m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);

    PlateauEstimate est;
    est.p = p;
    est.k_lo = k_lo;
    est.k_hi = k_hi;
    est.scaled_median = median;
    est.scaled_min = sorted.front();
    est.scaled_max = sorted.back();
    est.g_estimate = std::pow(sorted.front(), p);
    est.G_estimate = std::pow(sorted.back(), p);
    return est;
}

PlateauEstimate plateau_estimate(const SpectrumSeries& series, double p, std::size_t k_lo,
                                 std::size_t k_hi) {
    if (k_hi > series.trust_k)
        throw std::invalid_argument("plateau_estimate: window extends past trust_k = " +
                                    std::to_string(series.trust_k));
    return plateau_estimate(series.expanded, p, k_lo, k_hi);
}

double quasi_norm(const std::vector<double>& expanded, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("quasi_norm: p must be > 0");
    double sup = 0.0;
    for (std::size_t k = 0; k < expanded.size(); ++k)
        sup = std::max(sup, std::pow(static_cast<double>(k + 1), 1.0 / p) * expanded[k]);
    return sup;
}

double quasi_norm(const SpectrumSeries& series, double p) { return quasi_norm(series.expanded, p); }

namespace {

std::vector<double> descending_singular_values(const Eigen::MatrixXd& m) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

std::vector<double> descending_eigenvalues(const Eigen::MatrixXd& sym) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

}  // namespace

IdentityReport finite_matrix_identities(std::uint64_t seed, int size, double p) {
    if (size < 2) throw std::invalid_argument("finite_matrix_identities: size must be >= 2");
    if (!(p > 0.0)) throw std::invalid_argument("finite_matrix_identities: p must be > 0");

    IdentityReport report;
    report.seed = seed;
    report.size = size;
    report.p = p;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_matrix = [&]() {
        Eigen::MatrixXd m(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) m(i, j) = gauss(rng);
        return m;
    };

    const Eigen::MatrixXd T = random_matrix();
    const Eigen::MatrixXd T1 = random_matrix();
    const Eigen::MatrixXd T2 = random_matrix();

    const std::vector<double> sv = descending_singular_values(T);
    const std::vector<double> left = descending_eigenvalues(T.transpose() * T);
    const std::vector<double> right = descending_eigenvalues(T * T.transpose());

    const double scale = std::max(1e-300, sv.empty() ? 0.0 : sv.front() * sv.front());
    for (int k = 0; k < size; ++k) {
        report.max_spectral_mismatch =
            std::max(report.max_spectral_mismatch, std::abs(left[k] - sv[k] * sv[k]) / scale);
        report.max_crossover_mismatch =
            std::max(report.max_crossover_mismatch, std::abs(left[k] - right[k]) / scale);
    }
    if (report.max_spectral_mismatch > 1e-10)
        report.violations.push_back("eigenvalues of T^T T deviate from squared singular values by " +
                                    std::to_string(report.max_spectral_mismatch));
    if (report.max_crossover_mismatch > 1e-10)
        report.violations.push_back("spectra of T^T T and T T^T deviate by " +
                                    std::to_string(report.max_crossover_mismatch));

    const double q = p / (p + 1.0);
    const double lhs = std::pow(quasi_norm(descending_singular_values(T1 + T2), p), q);
    const double rhs = std::pow(quasi_norm(descending_singular_values(T1), p), q) +
                       std::pow(quasi_norm(descending_singular_values(T2), p), q);
    report.triangle_slack = rhs - lhs;
    if (lhs > rhs + 1e-12 * std::max(1.0, rhs))
        report.violations.push_back("quasi-norm triangle inequality violated by " +
                                    std::to_string(lhs - rhs));
    return report;
}

}  // namespace cusplab
