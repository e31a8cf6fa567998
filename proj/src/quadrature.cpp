#include "scatter/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace scatter {

std::vector<QuadratureNode> gauss_legendre_unit(int n) {
    if (n < 1) throw std::invalid_argument("quadrature order must be positive");
    std::vector<QuadratureNode> rule(n);

    for (int i = 0; i < n; ++i) {
        // Chebyshev-based initial guess for the i-th root of P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule[i] = {(1.0 - x) / 2.0, w / 2.0};  // map from [-1, 1], roots descend in x
    }
    return rule;
}

}  // namespace scatter
