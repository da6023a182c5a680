#pragma once

#include <vector>

namespace spcol {

// Gauss-Legendre rule on [-1, 1].
struct gauss_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

gauss_rule gauss_legendre(int points);

// Rule mapped onto [a, b].
gauss_rule gauss_on_interval(const gauss_rule& base, double a, double b);

}  // namespace spcol
