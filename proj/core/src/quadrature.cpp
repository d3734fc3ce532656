#include "cusplab/quadrature.hpp"

#include <cmath>

namespace cusplab {

namespace {

// P_n(x) and its derivative by the three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (n == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

Quadrature gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1, got " + std::to_string(n));

    Quadrature q;
    q.nodes.assign(n, 0.0);
    q.weights.assign(n, 0.0);

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-like estimate of the i-th root.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 60; ++it) {
            legendre_pair(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_pair(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x decreases with i; store ascending with the symmetric partner
        q.nodes[i] = -x;
        q.nodes[n - 1 - i] = x;
        q.weights[i] = w;
        q.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) q.nodes[n / 2] = 0.0;
    return q;
}

Quadrature gauss_legendre(int n, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: interval must satisfy a < b");
    Quadrature base = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < base.size(); ++i) {
        base.nodes[i] = mid + half * base.nodes[i];
        base.weights[i] *= half;
    }
    return base;
}

Quadrature composite_gauss(int panels, int order, double half_width, double grading) {
    if (panels < 1) throw std::invalid_argument("composite_gauss: panels must be >= 1");
    if (order < 1) throw std::invalid_argument("composite_gauss: order must be >= 1");
    if (!(half_width > 0.0)) throw std::invalid_argument("composite_gauss: half_width must be > 0");
    if (grading < 0.0) throw std::invalid_argument("composite_gauss: grading must be >= 0");

    std::vector<double> edges(panels + 1);
    for (int p = 0; p <= panels; ++p) {
        const double t = -1.0 + 2.0 * p / panels;
        edges[p] = grading == 0.0 ? half_width * t
                                  : half_width * std::sinh(grading * t) / std::sinh(grading);
    }

    const Quadrature base = gauss_legendre(order);
    Quadrature q;
    q.nodes.reserve(static_cast<std::size_t>(panels) * order);
    q.weights.reserve(static_cast<std::size_t>(panels) * order);
    for (int p = 0; p < panels; ++p) {
        const double mid = 0.5 * (edges[p] + edges[p + 1]);
        const double half = 0.5 * (edges[p + 1] - edges[p]);
        for (int i = 0; i < order; ++i) {
            q.nodes.push_back(mid + half * base.nodes[i]);
            q.weights.push_back(half * base.weights[i]);
        }
    }
    return q;
}

double legendre(int l, double x) {
    if (l < 0) throw std::invalid_argument("legendre: l must be >= 0");
    double p0 = 1.0, p1 = x;
    if (l == 0) return 1.0;
    for (int k = 2; k <= l; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::vector<double> legendre_all(int l_max, double x) {
    if (l_max < 0) throw std::invalid_argument("legendre_all: l_max must be >= 0");
    std::vector<double> p(static_cast<std::size_t>(l_max) + 1);
    p[0] = 1.0;
    if (l_max >= 1) p[1] = x;
    for (int k = 2; k <= l_max; ++k)
        p[k] = ((2 * k - 1) * x * p[k - 1] - (k - 1) * p[k - 2]) / k;
    return p;
}

RadialGrid RadialGrid::gauss(int n, double r_max) {
    if (n < 1) throw std::invalid_argument("RadialGrid::gauss: n must be >= 1");
    if (!(r_max > 0.0)) throw std::invalid_argument("RadialGrid::gauss: r_max must be > 0");
    const Quadrature q = gauss_legendre(n, 0.0, r_max);
    RadialGrid g;
    g.nodes = q.nodes;
    g.weights = q.weights;
    g.r_max = r_max;
    return g;
}

}  // namespace cusplab
