#include "spcol/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace spcol {

gauss_rule gauss_legendre(int points) {
    if (points < 1) {
        throw std::invalid_argument("gauss_legendre: need at least one point");
    }
    gauss_rule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < points; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root.
        double x = std::cos(pi * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= points; ++j) {
                const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        rule.nodes[points - 1 - i] = x;
        rule.weights[points - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

gauss_rule gauss_on_interval(const gauss_rule& base, double a, double b) {
    gauss_rule out;
    const int n = static_cast<int>(base.nodes.size());
    out.nodes.resize(n);
    out.weights.resize(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out.nodes[i] = mid + half * base.nodes[i];
        out.weights[i] = half * base.weights[i];
    }
    return out;
}

}  // namespace spcol
