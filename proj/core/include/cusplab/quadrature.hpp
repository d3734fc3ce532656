#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cusplab {

// Nodes and weights of a quadrature rule. Nodes are strictly increasing.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

// n-point Gauss-Legendre rule on [-1, 1].
Quadrature gauss_legendre(int n);

// Affine image of the n-point Gauss-Legendre rule on [a, b].
Quadrature gauss_legendre(int n, double a, double b);

// Composite Gauss-Legendre rule on [-half_width, half_width] with `panels`
// panels of `order` points each. grading = 0 gives uniform panels; grading > 0
// places panel edges at half_width * sinh(grading*t)/sinh(grading) with t
// uniform on [-1, 1], clustering panels near the origin. Useful when the
// effective support of the integrand is much narrower than the interval.
Quadrature composite_gauss(int panels, int order, double half_width, double grading = 0.0);

// Legendre polynomial P_l(x), and the table P_0(x) .. P_lmax(x).
double legendre(int l, double x);
std::vector<double> legendre_all(int l_max, double x);

// Radial quadrature on (0, r_max]: Gauss-Legendre nodes mapped affinely.
// Weights are plain dr weights; r^2 volume factors are applied by consumers.
struct RadialGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double r_max = 0.0;

    std::size_t size() const { return nodes.size(); }

    static RadialGrid gauss(int n = 320, double r_max = 18.0);
};

// Thrown when doubling the node count moves a quadrature result by more than
// the stated tolerance, i.e. the supplied grid cannot support the integrand.
class UnderResolvedGrid : public std::runtime_error {
public:
    UnderResolvedGrid(const std::string& message, double coarse, double refined)
        : std::runtime_error(message), coarse_value(coarse), refined_value(refined) {}

    double coarse_value;
    double refined_value;
};

}  // namespace cusplab
