#pragma once

#include "scatter/lattice.hpp"
#include "scatter/media.hpp"
#include "scatter/rational.hpp"

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace scatter {

enum class Exec { serial, parallel };

struct Arrival {
    Rational time;
    Rational amplitude;                    // exact merged sum, never zero
    std::vector<LatticePoint> contributors;  // lattice classes sharing the time
};

// Finite truncation of the boundary impulse response: every arrival time
// lies strictly between 0 and the horizon, times strictly increasing.
struct GreensTruncation {
    Rational horizon;
    MediumParams params;
    std::vector<Arrival> arrivals;
};

// Phi(r, k) = prod_j f^{(k_j, k_{j+1})}(r_j) with k_{n+1} = 0, exact.
Rational amplitude(const std::vector<Rational>& r, const LatticePoint& k);

// Amplitudes for a batch of lattice points. The parallel path computes
// per-point products over a pre-built table of radial evaluations; results
// are exact rationals, so both paths agree identically.
std::vector<Rational> amplitudes(const std::vector<Rational>& r,
                                 const std::vector<LatticePoint>& points,
                                 Exec exec = Exec::parallel);

GreensTruncation synthesize(const MediumParams& params, const Rational& T,
                            std::size_t lattice_budget = kDefaultLatticeBudget,
                            Exec exec = Exec::parallel);

// Sum of squared per-class amplitudes before time merging; bounded by 1.
Rational energy(const MediumParams& params, const Rational& T,
                std::size_t lattice_budget = kDefaultLatticeBudget);

// Fourier transform of the truncated delta train under the e^{+i sigma t}
// convention, i.e. sum of amplitude * exp(i t sigma) over arrivals.
std::complex<double> spectrum_poly(const GreensTruncation& g, double sigma);
std::complex<double> spectrum_poly(const MediumParams& params, const Rational& T, double sigma,
                                   std::size_t lattice_budget = kDefaultLatticeBudget);
std::vector<std::complex<double>> spectrum_poly_sweep(const GreensTruncation& g,
                                                      std::span<const double> sigmas,
                                                      Exec exec = Exec::parallel);

// time,amplitude,time_float,amplitude_float,contributors
void write_arrivals_csv(std::ostream& os, const GreensTruncation& g);
nlohmann::json to_json(const GreensTruncation& g);

}  // namespace scatter
