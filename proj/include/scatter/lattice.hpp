#pragma once

#include "scatter/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace scatter {

// One arrival-time class: k_1 = 1, entries nonnegative, support contiguous
// (k_j = 0 forces k_{j+1} = 0), with the convention k_{n+1} = 0.
using LatticePoint = std::vector<int>;

inline constexpr std::size_t kDefaultLatticeBudget = 10'000'000;

struct LatticeBudgetExceeded : std::runtime_error {
    explicit LatticeBudgetExceeded(std::size_t budget)
        : std::runtime_error("lattice enumeration exceeds budget of " +
                             std::to_string(budget) + " points") {}
};

Rational arrival_time(const std::vector<Rational>& tau, const LatticePoint& k);

bool is_lattice_point(const LatticePoint& k);

// Exactly the lattice points with <tau, k> < T, emitted in lexicographic
// order. Depth-first with pruning on the running inner product.
std::vector<LatticePoint> enumerate_lattice(const std::vector<Rational>& tau, const Rational& T,
                                            std::size_t budget = kDefaultLatticeBudget);

}  // namespace scatter
