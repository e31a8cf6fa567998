#pragma once

#include <vector>

namespace scatter {

struct QuadratureNode {
    double x;
    double w;
};

// Gauss-Legendre rule mapped to [0, 1]; exact for polynomials of degree
// 2n - 1. Nodes are found by Newton iteration on the Legendre recurrence.
std::vector<QuadratureNode> gauss_legendre_unit(int n);

}  // namespace scatter
