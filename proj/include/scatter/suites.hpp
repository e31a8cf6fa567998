#pragma once

#include "scatter/media.hpp"
#include "scatter/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace scatter {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Deterministic random medium used by every randomized suite: r_j uniform
// over {±1/10, ..., ±9/10}, tau_j uniform over {1/2, 1, ..., 4}. Failures
// are reproducible from the seed alone.
MediumParams random_medium(std::mt19937_64& rng, int layers);

// Smallest horizon on a fixed 5/4-multiplicative schedule whose synthesis
// lands in [min_arrivals, max_arrivals]; nullopt when the schedule jumps
// over the band or the lattice budget trips.
std::optional<Rational> size_horizon(const MediumParams& params, std::size_t min_arrivals,
                                     std::size_t max_arrivals);

// The checks below pin their default scales and tolerances to the
// acceptance criteria; the CLI may rerun them at other scales.
CheckResult check_construction_agreement(int pq_max = 8);
CheckResult check_eigen_identity(int pq_max = 8);
CheckResult check_orthogonality(int pq_max = 5, int order = 64, double tol = 1e-8,
                                double stability_tol = 1e-10);
CheckResult check_oracle_equivalence(std::uint64_t seed = 7, int media = 100);
CheckResult check_fourier_identity(std::uint64_t seed = 11, int tuples_per_n = 20,
                                   double tol = 1e-8);
CheckResult check_spectrum_convergence();
CheckResult check_recurrence_machinery(int m_max = 6, int nu_max = 6, long lambda_max = 100);
CheckResult check_pde_residuals(std::uint64_t seed = 13, int points = 50, double h = 1e-3,
                                double tol = 1e-6);
CheckResult check_energy_bound(std::uint64_t seed = 7, int media = 100);

}  // namespace scatter
