#include "cusplab/density.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace cusplab {

double angular_projection(int l, int u_order, const std::function<double(double)>& f) {
    if (l < 0) throw std::invalid_argument("angular_projection: l must be >= 0");
    if (u_order < l + 1)
        throw std::invalid_argument("angular_projection: u_order must be >= l + 1 (rule cannot separate channel " +
                                    std::to_string(l) + ")");
    const Quadrature q = gauss_legendre(u_order);
    double acc = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i)
        acc += q.weights[i] * legendre(l, q.nodes[i]) * f(q.nodes[i]);
    return 2.0 * M_PI * acc;
}

double partial_wave_amplitude(const CuspState& state, int l, double rho, double r, int u_order) {
    if (!(rho > 0.0) || !(r > 0.0))
        throw std::invalid_argument("partial_wave_amplitude: rho and r must be > 0");
    return angular_projection(l, u_order, [&](double u) { return state.psi(rho, r, u); });
}

std::vector<Eigen::MatrixXd> amplitude_table(const CuspState& state, int l_max,
                                             const RadialGrid& grid, int u_order) {
    if (l_max < 0) throw std::invalid_argument("amplitude_table: l_max must be >= 0");
    if (u_order < l_max + 1)
        throw std::invalid_argument("amplitude_table: u_order must be >= l_max + 1");
    if (grid.size() == 0) throw std::invalid_argument("amplitude_table: empty grid");

    const int n = static_cast<int>(grid.size());
    const Quadrature gu = gauss_legendre(u_order);

    // WP(q, l) = 2 pi w_q P_l(u_q); amplitudes become one matrix product per row block
    Eigen::MatrixXd WP(u_order, l_max + 1);
    for (int q = 0; q < u_order; ++q) {
        const std::vector<double> P = legendre_all(l_max, gu.nodes[q]);
        for (int l = 0; l <= l_max; ++l) WP(q, l) = 2.0 * M_PI * gu.weights[q] * P[l];
    }

    Eigen::VectorXd E(n);
    for (int i = 0; i < n; ++i) E[i] = std::exp(-state.zeta() * grid.nodes[i]);

    const bool anti = state.symmetry() == Symmetry::antisymmetric;
    const double sign = anti ? -1.0 : 1.0;  // a_l(r, rho) = sign * a_l(rho, r)
    const double c = state.c();

    std::vector<Eigen::MatrixXd> table(l_max + 1, Eigen::MatrixXd(n, n));
    Eigen::MatrixXd psi_block;
    for (int i = 0; i < n; ++i) {
        const double rho = grid.nodes[i];
        const int m = n - i;
        psi_block.resize(m, u_order);
        for (int jj = 0; jj < m; ++jj) {
            const double r = grid.nodes[i + jj];
            double pref = E[i] * E[i + jj];
            if (anti) pref *= rho - r;
            const double rr = rho * rho + r * r;
            const double cross = 2.0 * rho * r;
            for (int q = 0; q < u_order; ++q) {
                const double s2 = rr - cross * gu.nodes[q];
                const double s = std::sqrt(s2 > 0.0 ? s2 : 0.0);
                psi_block(jj, q) = pref * (1.0 + c * s);
            }
        }
        const Eigen::MatrixXd proj = psi_block * WP;  // m x (l_max + 1)
        for (int l = 0; l <= l_max; ++l)
            for (int jj = 0; jj < m; ++jj) {
                table[l](i, i + jj) = proj(jj, l);
                table[l](i + jj, i) = sign * proj(jj, l);
            }
    }
    return table;
}

ChannelOperator channel_operator(const CuspState& state, int ell, const RadialGrid& grid,
                                 int u_order) {
    if (ell < 0) throw std::invalid_argument("channel_operator: ell must be >= 0");
    if (u_order == 0) u_order = ell + 16;
    ChannelOperator ch;
    ch.ell = ell;
    ch.amplitude_matrix = std::sqrt(2.0) * amplitude_table(state, ell, grid, u_order)[ell];
    return ch;
}

Eigen::MatrixXd channel_matrix(const ChannelOperator& channel, const RadialGrid& rho_grid,
                               const RadialGrid& r_grid) {
    if (rho_grid.size() != r_grid.size() || rho_grid.nodes != r_grid.nodes ||
        rho_grid.weights != r_grid.weights)
        throw std::invalid_argument(
            "channel_matrix: rho- and r-axis grids differ; a square symmetric discretization is required");
    const int n = static_cast<int>(rho_grid.size());
    if (channel.amplitude_matrix.rows() != n || channel.amplitude_matrix.cols() != n)
        throw std::invalid_argument("channel_matrix: amplitude matrix does not match the grid");

    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i)
        d[i] = std::sqrt(rho_grid.weights[i]) * rho_grid.nodes[i];
    return d.asDiagonal() * channel.amplitude_matrix * d.asDiagonal();
}

namespace {

std::vector<double> squared_singular_values(const Eigen::MatrixXd& m) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    std::vector<double> out(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<std::size_t>(i)] = sv[i] * sv[i];
    return out;  // BDCSVD returns descending singular values
}

std::vector<std::vector<double>> all_channel_spectra(const CuspState& state, const RadialGrid& grid,
                                                     int l_max, int u_order, bool parallel) {
    const std::vector<Eigen::MatrixXd> table = amplitude_table(state, l_max, grid, u_order);
    const int n = static_cast<int>(grid.size());
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i)
        d[i] = std::sqrt(grid.weights[i]) * grid.nodes[i];

    std::vector<std::vector<double>> spectra(l_max + 1);
    auto run_channel = [&](int l) {
        const Eigen::MatrixXd m =
            std::sqrt(2.0) * (d.asDiagonal() * table[l] * d.asDiagonal());
        spectra[l] = squared_singular_values(m);
    };

    unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(l_max) + 1);
    if (workers <= 1) {
        for (int l = 0; l <= l_max; ++l) run_channel(l);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int l = next.fetch_add(1); l <= l_max; l = next.fetch_add(1)) run_channel(l);
            });
        for (std::thread& t : pool) t.join();
    }
    return spectra;
}

}  // namespace

std::vector<double> channel_spectrum(const ChannelOperator& channel, const RadialGrid& grid) {
    return squared_singular_values(channel_matrix(channel, grid, grid));
}

std::vector<double> channel_spectrum(const CuspState& state, int ell, const RadialGrid& grid,
                                     int u_order) {
    return channel_spectrum(channel_operator(state, ell, grid, u_order), grid);
}

double SpectrumSeries::sum() const {
    double acc = 0.0;
    for (const SpectrumEntry& e : entries) acc += e.value * e.multiplicity;
    return acc;
}

SpectrumSeries merge_channels(const std::vector<std::vector<double>>& per_channel,
                              double floor_ratio) {
    SpectrumSeries series;
    for (std::size_t l = 0; l < per_channel.size(); ++l)
        for (double v : per_channel[l])
            series.entries.push_back({v < 0.0 ? 0.0 : v, 2 * static_cast<int>(l) + 1,
                                      static_cast<int>(l)});

    std::stable_sort(series.entries.begin(), series.entries.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) {
                         if (a.value != b.value) return a.value > b.value;
                         return a.channel < b.channel;
                     });

    if (!series.entries.empty()) {
        const double floor = floor_ratio * series.entries.front().value;
        series.entries.erase(
            std::remove_if(series.entries.begin(), series.entries.end(),
                           [floor](const SpectrumEntry& e) { return e.value < floor; }),
            series.entries.end());
    }

    for (const SpectrumEntry& e : series.entries)
        for (int m = 0; m < e.multiplicity; ++m) {
            series.expanded.push_back(e.value);
            series.expanded_channel.push_back(e.channel);
        }
    series.trust_k = series.expanded.size();
    return series;
}

SpectrumSeries assemble_spectrum(const CuspState& state, const RadialGrid& grid,
                                 const AssembleOptions& options) {
    if (options.l_max < 0) throw std::invalid_argument("assemble_spectrum: l_max must be >= 0");
    const int u_order = options.u_order > 0 ? options.u_order : options.l_max + 16;
    if (u_order < options.l_max + 1)
        throw std::invalid_argument("assemble_spectrum: u_order must be >= l_max + 1");

    const std::vector<std::vector<double>> spectra =
        all_channel_spectra(state, grid, options.l_max, u_order, options.parallel);
    SpectrumSeries series = merge_channels(spectra);

    if (!series.entries.empty()) {
        const double lambda1 = series.entries.front().value;
        const double top_last = spectra[options.l_max].empty() ? 0.0 : spectra[options.l_max].front();
        if (top_last > 1e-10 * lambda1)
            series.warnings.push_back("channel l_max=" + std::to_string(options.l_max) +
                                      " still contributes " + std::to_string(top_last / lambda1) +
                                      " of lambda_1; the l_max truncation is suspect");
    }

    if (options.refine && grid.size() >= 16) {
        const RadialGrid half = RadialGrid::gauss(static_cast<int>(grid.size()) / 2, grid.r_max);
        const SpectrumSeries coarse =
            merge_channels(all_channel_spectra(state, half, options.l_max, u_order, options.parallel));
        const std::size_t m = std::min(series.expanded.size(), coarse.expanded.size());
        std::size_t k = 0;
        while (k < m &&
               std::abs(series.expanded[k] - coarse.expanded[k]) <= 0.05 * series.expanded[k])
            ++k;
        series.trust_k = k;
    }
    return series;
}

namespace {

double trace_integrand(const CuspState& state, double rho, double r) {
    const double c = state.c();
    const double sum = rho + r;
    const double diff = std::abs(rho - r);
    // closed forms of Int_{-1}^{1} s^m du for m = 1, 2 with s = |t - x|
    const double int_s = (sum * sum * sum - diff * diff * diff) / (3.0 * rho * r);
    const double bracket = 2.0 + 2.0 * c * int_s + 2.0 * c * c * (rho * rho + r * r);
    double v = std::exp(-2.0 * state.zeta() * sum) * bracket;
    if (state.symmetry() == Symmetry::antisymmetric) v *= (rho - r) * (rho - r);
    return v;
}

double trace_quadrature(const CuspState& state, const RadialGrid& outer, const Quadrature& inner_base) {
    // integrand is symmetric in (rho, r) but kinked on rho = r; integrate the
    // rho < r triangle only and double, keeping spectral accuracy per axis
    double total = 0.0;
    for (std::size_t j = 0; j < outer.size(); ++j) {
        const double r = outer.nodes[j];
        double row = 0.0;
        for (std::size_t q = 0; q < inner_base.size(); ++q) {
            const double rho = 0.5 * r * (inner_base.nodes[q] + 1.0);
            const double w = 0.5 * r * inner_base.weights[q];
            row += w * rho * rho * trace_integrand(state, rho, r);
        }
        total += outer.weights[j] * r * r * row;
    }
    return 32.0 * M_PI * M_PI * total;
}

}  // namespace

double trace_sum(const CuspState& state, const RadialGrid& grid) {
    if (grid.size() == 0) throw std::invalid_argument("trace_sum: empty grid");
    const int n = static_cast<int>(grid.size());
    const double coarse = trace_quadrature(state, grid, gauss_legendre(n));
    const double fine = trace_quadrature(state, RadialGrid::gauss(2 * n, grid.r_max),
                                         gauss_legendre(2 * n));
    if (std::abs(coarse - fine) > 1e-8 * std::max(1e-300, std::abs(fine)))
        throw UnderResolvedGrid("trace_sum: doubling the grid moved the result by more than 1e-8 relative",
                                coarse, fine);
    return coarse;
}

}  // namespace cusplab
