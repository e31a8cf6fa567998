#include "scatter/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace scatter {

DiskPoint DiskPoint::cartesian(std::complex<double> v) {
    DiskPoint p;
    p.value = v;
    p.radius = std::abs(v);
    p.angle = std::atan2(v.imag(), v.real());
    p.on_boundary = std::abs(p.radius - 1.0) <= 1e-12;
    if (p.radius > 1.0 + 1e-12)
        throw std::domain_error("disk point outside the closed unit disk");
    return p;
}

DiskPoint DiskPoint::polar(double radius, double angle) {
    if (radius < 0.0 || radius > 1.0 + 1e-12)
        throw std::domain_error("disk point radius outside [0, 1]");
    DiskPoint p;
    p.radius = radius;
    p.angle = angle;
    p.value = std::polar(radius, angle);
    p.on_boundary = radius == 1.0;
    return p;
}

DiskTuple disk_tuple_from_reflectivities(const std::vector<Rational>& r) {
    DiskTuple w;
    w.reserve(r.size());
    for (const auto& v : r) w.push_back(DiskPoint::cartesian({to_double(v), 0.0}));
    return w;
}

double reduce_angle(double xi) {
    xi = std::fmod(xi, 2.0 * M_PI);
    if (xi < 0.0) xi += 2.0 * M_PI;
    return xi;
}

std::complex<double> mobius(const DiskPoint& w, std::complex<double> z, std::complex<double> v) {
    if (std::abs(v) > 1.0 + 1e-12) throw std::domain_error("mobius argument outside the disk");
    if (w.on_boundary) return z * w.value;
    std::complex<double> out = z * (v + w.value) / (1.0 + std::conj(w.value) * v);
    const double mag = std::abs(out);
    if (mag > 1.0) out /= mag;  // the exact map never leaves the disk
    return out;
}

std::complex<double> compose(const DiskTuple& w, const PhaseTuple& z) {
    if (w.size() != z.size() || w.empty())
        throw std::invalid_argument("compose needs equal-length nonempty tuples");
    std::complex<double> v{0.0, 0.0};
    for (std::size_t j = w.size(); j-- > 0;) v = mobius(w[j], std::polar(1.0, z[j]), v);
    return v;
}

namespace {

// One slice of the DFT sum at fixed outer index: inner dimensions are
// walked in a fixed nesting order so serial and parallel totals are the
// same floating-point value.
std::complex<double> dft_slice(const DiskTuple& w, const std::vector<int>& k, int grid_size,
                               int outer_index) {
    const std::size_t n = w.size();
    const double step = 2.0 * M_PI / grid_size;
    PhaseTuple z(n, 0.0);
    z[0] = step * outer_index;

    std::complex<double> acc{0.0, 0.0};
    if (n == 1) {
        acc = compose(w, z) * std::polar(1.0, -k[0] * z[0]);
    } else if (n == 2) {
        for (int m1 = 0; m1 < grid_size; ++m1) {
            z[1] = step * m1;
            acc += compose(w, z) * std::polar(1.0, -(k[0] * z[0] + k[1] * z[1]));
        }
    } else {
        for (int m1 = 0; m1 < grid_size; ++m1) {
            z[1] = step * m1;
            for (int m2 = 0; m2 < grid_size; ++m2) {
                z[2] = step * m2;
                acc += compose(w, z) *
                       std::polar(1.0, -(k[0] * z[0] + k[1] * z[1] + k[2] * z[2]));
            }
        }
    }
    return acc;
}

}  // namespace

std::complex<double> fourier_coefficient(const DiskTuple& w, const std::vector<int>& k,
                                         int grid_size, Exec exec) {
    const std::size_t n = w.size();
    if (n < 1 || n > 3)
        throw std::invalid_argument("tensor-grid DFT supports 1 <= n <= 3");
    if (k.size() != n) throw std::invalid_argument("index length must match tuple length");
    if (grid_size < 2) throw std::invalid_argument("grid size must be at least 2");
    for (const auto& p : w)
        if (p.on_boundary || p.radius >= 1.0)
            throw std::invalid_argument("DFT extraction needs strictly interior w");

    std::vector<std::complex<double>> slices(grid_size);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int m = 0; m < grid_size; ++m) slices[m] = dft_slice(w, k, grid_size, m);
    } else {
        for (int m = 0; m < grid_size; ++m) slices[m] = dft_slice(w, k, grid_size, m);
    }

    std::complex<double> total{0.0, 0.0};
    for (int m = 0; m < grid_size; ++m) total += slices[m];
    double cells = 1.0;
    for (std::size_t j = 0; j < n; ++j) cells *= grid_size;
    return total / cells;
}

PhaseTuple kronecker_line(const std::vector<Rational>& tau, double sigma) {
    PhaseTuple z;
    z.reserve(tau.size());
    for (const auto& t : tau) z.push_back(reduce_angle(to_double(t) * sigma));
    return z;
}

std::complex<double> backward_spectrum(const MediumParams& params, double sigma) {
    params.validate();
    return compose(disk_tuple_from_reflectivities(params.r), kronecker_line(params.tau, sigma));
}

std::vector<double> truncation_error(const MediumParams& params, const Rational& T,
                                     std::span<const double> sigmas,
                                     std::size_t lattice_budget, Exec exec) {
    const GreensTruncation g = synthesize(params, T, lattice_budget);
    std::vector<double> err(sigmas.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(sigmas.size()); ++i)
            err[i] = std::abs(backward_spectrum(params, sigmas[i]) - spectrum_poly(g, sigmas[i]));
    } else {
        for (std::size_t i = 0; i < sigmas.size(); ++i)
            err[i] = std::abs(backward_spectrum(params, sigmas[i]) - spectrum_poly(g, sigmas[i]));
    }
    return err;
}

namespace {

struct PdeProbe {
    const DiskTuple& w;
    const PhaseTuple& z;
    int j;  // zero-based layer index

    std::complex<double> at(std::complex<double> dw, double dtheta, double dxi_j,
                            double dxi_next) const {
        DiskTuple wp = w;
        if (dw != std::complex<double>{0.0, 0.0})
            wp[j] = DiskPoint::cartesian(w[j].value + dw);
        if (dtheta != 0.0) wp[j] = DiskPoint::polar(w[j].radius, w[j].angle + dtheta);
        PhaseTuple zp = z;
        zp[j] += dxi_j;
        if (j + 1 < static_cast<int>(z.size())) zp[j + 1] += dxi_next;
        return compose(wp, zp);
    }
};

}  // namespace

PdeResidual pde_residual(const DiskTuple& w, const PhaseTuple& z, int layer_index, double h) {
    const int n = static_cast<int>(w.size());
    if (z.size() != w.size()) throw std::invalid_argument("tuple length mismatch");
    if (layer_index < 1 || layer_index > n) throw std::invalid_argument("layer index out of range");
    if (h <= 0.0) throw std::invalid_argument("step must be positive");
    for (const auto& p : w)
        if (p.on_boundary || p.radius >= 1.0 - 10.0 * h || p.radius <= 10.0 * h)
            throw std::invalid_argument("stencil needs 10h < |w_j| < 1 - 10h");

    const int j = layer_index - 1;
    const bool last = (j + 1 == n);
    const PdeProbe probe{w, z, j};
    const std::complex<double> center = probe.at({0, 0}, 0, 0, 0);
    const double h2 = h * h;

    const std::complex<double> ux =
        (probe.at({h, 0}, 0, 0, 0) - probe.at({-h, 0}, 0, 0, 0)) / (2 * h);
    const std::complex<double> uy =
        (probe.at({0, h}, 0, 0, 0) - probe.at({0, -h}, 0, 0, 0)) / (2 * h);
    const std::complex<double> lap = (probe.at({h, 0}, 0, 0, 0) + probe.at({-h, 0}, 0, 0, 0) +
                                      probe.at({0, h}, 0, 0, 0) + probe.at({0, -h}, 0, 0, 0) -
                                      4.0 * center) / h2;
    const std::complex<double> utheta =
        (probe.at({0, 0}, h, 0, 0) - probe.at({0, 0}, -h, 0, 0)) / (2 * h);
    const std::complex<double> uxi =
        (probe.at({0, 0}, 0, h, 0) - probe.at({0, 0}, 0, -h, 0)) / (2 * h);

    std::complex<double> uxi_next{0.0, 0.0};
    std::complex<double> umixed{0.0, 0.0};
    if (!last) {
        uxi_next = (probe.at({0, 0}, 0, 0, h) - probe.at({0, 0}, 0, 0, -h)) / (2 * h);
        umixed = (probe.at({0, 0}, 0, h, h) - probe.at({0, 0}, 0, h, -h) -
                  probe.at({0, 0}, 0, -h, h) + probe.at({0, 0}, 0, -h, -h)) / (4 * h2);
    }

    const double rj = w[j].radius;
    const double weight = (1.0 - rj * rj) / 4.0;

    PdeResidual res;
    res.wave = std::abs(-weight * lap + umixed);
    res.coupling = std::abs(utheta - uxi + uxi_next);
    res.quadratic = std::abs(-weight * (ux * ux + uy * uy) + uxi_next * uxi);
    return res;
}

}  // namespace scatter
