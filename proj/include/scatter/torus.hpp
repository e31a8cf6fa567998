#pragma once

#include "scatter/greens.hpp"
#include "scatter/media.hpp"
#include "scatter/rational.hpp"

#include <complex>
#include <span>
#include <vector>

namespace scatter {

// A point of the closed unit disk with cached polar form. Whether the point
// sits exactly on the boundary is decided at construction: the polar
// constructor trusts its radius, the cartesian one applies a 1e-12 band.
struct DiskPoint {
    std::complex<double> value;
    double radius = 0.0;
    double angle = 0.0;
    bool on_boundary = false;

    static DiskPoint cartesian(std::complex<double> v);
    static DiskPoint polar(double radius, double angle);
};

using DiskTuple = std::vector<DiskPoint>;

// Torus point as a tuple of phases xi_j in [0, 2 pi); z_j = exp(i xi_j).
using PhaseTuple = std::vector<double>;

DiskTuple disk_tuple_from_reflectivities(const std::vector<Rational>& r);

double reduce_angle(double xi);

// z (v + w) / (1 + conj(w) v); collapses to the constant z w when w lies on
// the boundary. Rejects |v| > 1 + 1e-12.
std::complex<double> mobius(const DiskPoint& w, std::complex<double> z, std::complex<double> v);

// Right-to-left fold of the disk automorphisms evaluated at 0.
std::complex<double> compose(const DiskTuple& w, const PhaseTuple& z);

// Tensor-grid DFT coefficient of z -> compose(w, z) at integer index k
// (arbitrary sign pattern, so non-lattice indices are testable). Interior w
// and n <= 3 only. The parallel path splits the outer grid dimension and
// combines per-slice sums in index order, matching the serial reference
// bit-for-bit.
std::complex<double> fourier_coefficient(const DiskTuple& w, const std::vector<int>& k,
                                         int grid_size, Exec exec = Exec::parallel);

PhaseTuple kronecker_line(const std::vector<Rational>& tau, double sigma);

// Frequency response of the medium via the backward recurrence: the Mobius
// fold of the reflectivities along the Kronecker line. Modulus <= 1.
std::complex<double> backward_spectrum(const MediumParams& params, double sigma);

// |backward_spectrum - spectrum_poly| per sigma.
std::vector<double> truncation_error(const MediumParams& params, const Rational& T,
                                     std::span<const double> sigmas,
                                     std::size_t lattice_budget = kDefaultLatticeBudget,
                                     Exec exec = Exec::parallel);

struct PdeResidual {
    double wave = 0.0;       // |L_j u|, L_j = -weighted laplacian_j + d2/dxi_{j+1} dxi_j
    double coupling = 0.0;   // |C_j u|, C_j = d/dtheta_j - d/dxi_j + d/dxi_{j+1}
    double quadratic = 0.0;  // |E_j u|, the quadratic form attached to L_j
};

// Central finite-difference residuals of the three operators on the
// composition at (w, z). Requires 10 h < |w_j| < 1 - 10 h for every j so the
// stencil stays inside the disk and the phase derivative is defined.
PdeResidual pde_residual(const DiskTuple& w, const PhaseTuple& z, int layer_index, double h);

}  // namespace scatter
