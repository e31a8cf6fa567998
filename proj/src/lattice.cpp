#include "scatter/lattice.hpp"

namespace scatter {

Rational arrival_time(const std::vector<Rational>& tau, const LatticePoint& k) {
    Rational t(0);
    for (std::size_t j = 0; j < k.size() && j < tau.size(); ++j)
        if (k[j] != 0) t += tau[j] * Rational(k[j]);
    return t;
}

bool is_lattice_point(const LatticePoint& k) {
    if (k.empty() || k[0] != 1) return false;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (k[j] < 0) return false;
        if (j + 1 < k.size() && k[j] == 0 && k[j + 1] != 0) return false;
    }
    return true;
}

namespace {

void extend(const std::vector<Rational>& tau, const Rational& T, std::size_t budget,
            LatticePoint& k, std::size_t j, const Rational& elapsed,
            std::vector<LatticePoint>& out) {
    // Contiguity: a zero entry forces the remaining tail to zero, so the
    // point is complete as soon as one appears.
    if (j == tau.size() || k[j - 1] == 0) {
        if (out.size() >= budget) throw LatticeBudgetExceeded(budget);
        out.push_back(k);
        return;
    }
    for (int v = 0;; ++v) {
        const Rational t = elapsed + tau[j] * Rational(v);
        if (t >= T) break;
        k[j] = v;
        extend(tau, T, budget, k, j + 1, t, out);
    }
    k[j] = 0;
}

}  // namespace

std::vector<LatticePoint> enumerate_lattice(const std::vector<Rational>& tau, const Rational& T,
                                            std::size_t budget) {
    if (T <= 0) throw std::invalid_argument("horizon must be positive");
    std::vector<LatticePoint> out;
    if (tau.empty() || tau[0] >= T) return out;

    LatticePoint k(tau.size(), 0);
    k[0] = 1;
    extend(tau, T, budget, k, 1, tau[0], out);
    return out;
}

}  // namespace scatter
