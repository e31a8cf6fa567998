#pragma once

#include "scatter/bivar_poly.hpp"
#include "scatter/rational.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace scatter {

// Coefficients of a univariate polynomial in x, indexed by power.
// An empty vector is the zero polynomial.
using RadialCoeffs = std::vector<Rational>;

// Raised when two exact construction routes that must coincide do not.
// Signals an implementation bug, never bad input.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// Radial profile of the degree-(p+q) disk polynomial indexed by (p, q):
// x^p for q = 0 and p >= 0, identically zero for min{p,q} < 0 or p = 0 < q,
// and otherwise the signed binomial-sum closed form. Exact rationals,
// factorials in arbitrary precision.
RadialCoeffs closed_form_radial(int p, int q);

// Rodrigues-type construction: expand (1 - z zbar)^{p+q-1}, differentiate
// p times in zbar and q times in z, multiply by (1 - z zbar) and the
// rational prefactor (-1)^p / (q (p+q-1)!). Requires min{p,q} >= 1.
BivarPoly rodrigues(int p, int q);

// Monomial-wise lift x^t -> zeta^{(t+p-q)/2} conj(zeta)^{(t-p+q)/2} of a
// radial profile whose exponents all satisfy t >= |p-q| and t = p-q (mod 2).
BivarPoly lift_radial(int p, int q, const RadialCoeffs& radial);

struct ScatteringPoly {
    int p = 0;
    int q = 0;
    BivarPoly poly;
    RadialCoeffs radial;

    int angular_frequency() const { return p - q; }
};

// Builds both representations (Rodrigues route when min{p,q} >= 1, closed
// form always) and verifies they agree exactly before returning.
ScatteringPoly make_scattering_poly(int p, int q);

struct EigenCheckResult {
    bool ok = false;
    BivarPoly residual;  // laplacian(phi) + pq phi; empty iff ok
};

// Exact check that the (p, q) polynomial is an eigenfunction of the
// weighted laplacian with eigenvalue pq. Requires p, q >= 1.
EigenCheckResult eigen_check(int p, int q);

double eval_radial(const RadialCoeffs& f, double x);
Rational eval_radial_exact(const RadialCoeffs& f, const Rational& x);

// Exact division by (1 - x^2); throws InternalInconsistency when the
// factor is not present.
RadialCoeffs divide_out_boundary_factor(const RadialCoeffs& f);

// Inner product against the area measure 4 dx dy / (1 - x^2 - y^2), by
// Gauss-Legendre x trapezoid tensor quadrature in polar coordinates. The
// singular weight is cancelled analytically against the (1 - rho^2) factor
// carried by each polynomial, so both indices need pq >= 1.
std::complex<double> inner_product(const ScatteringPoly& a, const ScatteringPoly& b,
                                   int radial_order, int angular_order);

struct RadialSolution {
    int angular_index = 0;             // m
    long eigenvalue = 0;               // lambda = nu (m + nu)
    std::vector<Rational> coeffs;      // b_j by power j, b_m = 1
};

// True iff lambda = nu (m + nu) for some integer nu >= 1.
bool eigenvalue_quantization(int angular_index, long eigenvalue);

// Power-series solution of the separated eigenvalue equation, b_m = 1 and
// ((j+2)^2 - m^2) b_{j+2} = (j^2 - 4 lambda - m^2) b_j. Throws
// std::domain_error when the eigenvalue is not quantized.
RadialSolution recurrence_radial(int angular_index, long eigenvalue);

// {"p":.., "q":.., "terms":[{"a":..,"b":..,"num":"..","den":".."}]}
nlohmann::json to_json(const ScatteringPoly& sp);
ScatteringPoly scattering_poly_from_json(const nlohmann::json& j);

}  // namespace scatter
