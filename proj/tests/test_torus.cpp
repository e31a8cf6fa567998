#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scatter/scattering_poly.hpp"
#include "scatter/torus.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace scatter;
using cplx = std::complex<double>;

namespace {

MediumParams make_params(std::vector<Rational> tau, std::vector<Rational> r) {
    MediumParams p;
    p.tau = std::move(tau);
    p.r = std::move(r);
    return p;
}

}  // namespace

TEST_CASE("mobius map basics") {
    const cplx v0{0.3, -0.2};
    CHECK(mobius(DiskPoint::cartesian({0.0, 0.0}), {1.0, 0.0}, v0) == v0);

    CHECK(std::abs(mobius(DiskPoint::cartesian({0.5, 0.0}), {1.0, 0.0}, {0.0, 0.0}) -
                   cplx{0.5, 0.0}) == 0.0);

    // boundary collapse: constant z w no matter the argument
    const auto w = DiskPoint::polar(1.0, 0.7);
    const cplx z = std::polar(1.0, 1.3);
    CHECK(mobius(w, z, {0.2, 0.1}) == z * w.value);
    CHECK(mobius(w, z, {-0.8, 0.05}) == z * w.value);

    CHECK_THROWS_AS(mobius(DiskPoint::cartesian({0.5, 0.0}), {1.0, 0.0}, {1.5, 0.0}),
                    std::domain_error);
}

TEST_CASE("compose: explicit small cases") {
    DiskTuple w1{DiskPoint::cartesian({0.4, 0.2})};
    PhaseTuple z1{0.9};
    CHECK(std::abs(compose(w1, z1) - std::polar(1.0, 0.9) * cplx{0.4, 0.2}) <= 1e-15);

    // two-step expansion as its own reference
    DiskTuple w2{DiskPoint::cartesian({0.5, -0.1}), DiskPoint::cartesian({-0.2, 0.3})};
    PhaseTuple z2{0.4, 2.1};
    const cplx za = std::polar(1.0, 0.4), zb = std::polar(1.0, 2.1);
    const cplx inner = zb * w2[1].value;
    const cplx expected = za * (w2[0].value + inner) / (1.0 + std::conj(w2[0].value) * inner);
    CHECK(std::abs(compose(w2, z2) - expected) <= 1e-15);

    DiskTuple zeros{DiskPoint::cartesian({0.0, 0.0}), DiskPoint::cartesian({0.0, 0.0})};
    CHECK(compose(zeros, {1.0, 2.0}) == cplx{0.0, 0.0});
}

TEST_CASE("composition stays in the closed disk") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> radius(0.0, 0.999);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 4);
        DiskTuple w;
        PhaseTuple z;
        for (int j = 0; j < n; ++j) {
            w.push_back(DiskPoint::polar(radius(rng), angle(rng)));
            z.push_back(angle(rng));
        }
        CHECK(std::abs(compose(w, z)) <= 1.0);
    }
}

TEST_CASE("boundary collapse truncates the dependence on deeper factors") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> radius(0.0, 0.9);
    for (int i = 0; i < 20; ++i) {
        DiskTuple w{DiskPoint::polar(radius(rng), angle(rng)), DiskPoint::polar(1.0, angle(rng)),
                    DiskPoint::polar(radius(rng), angle(rng))};
        PhaseTuple z{angle(rng), angle(rng), angle(rng)};
        const cplx base = compose(w, z);

        DiskTuple w_perturbed = w;
        w_perturbed[2] = DiskPoint::polar(radius(rng), angle(rng));
        PhaseTuple z_perturbed = z;
        z_perturbed[2] = angle(rng);
        CHECK(std::abs(compose(w_perturbed, z_perturbed) - base) <= 1e-15);
    }
}

TEST_CASE("Fourier coefficients: one factor") {
    DiskTuple w{DiskPoint::cartesian({0.5, 0.0})};
    CHECK(std::abs(fourier_coefficient(w, {1}, 32) - cplx{0.5, 0.0}) <= 1e-12);
    CHECK(std::abs(fourier_coefficient(w, {0}, 32)) <= 1e-12);
    CHECK(std::abs(fourier_coefficient(w, {2}, 32)) <= 1e-12);
    CHECK(std::abs(fourier_coefficient(w, {-1}, 32)) <= 1e-12);
}

TEST_CASE("Fourier coefficients: the worked two-factor value") {
    DiskTuple w{DiskPoint::cartesian({0.5, 0.0}), DiskPoint::cartesian({0.0, 0.3})};
    const auto c = fourier_coefficient(w, {1, 2}, 64);
    CHECK(std::abs(c - cplx{0.03375, 0.0}) <= 1e-10);

    // same value through the polynomial product
    const auto phi12 = make_scattering_poly(1, 2);
    const auto phi20 = make_scattering_poly(2, 0);
    const auto product = phi12.poly.eval(w[0].value) * phi20.poly.eval(w[1].value);
    CHECK(std::abs(c - product) <= 1e-10);

    CHECK(std::abs(fourier_coefficient(w, {0, 1}, 64)) <= 1e-10);
    CHECK(std::abs(fourier_coefficient(w, {1, -1}, 64)) <= 1e-10);
}

TEST_CASE("Fourier extraction preconditions") {
    DiskTuple big(4, DiskPoint::cartesian({0.1, 0.0}));
    CHECK_THROWS_AS(fourier_coefficient(big, {1, 0, 0, 0}, 16), std::invalid_argument);

    DiskTuple boundary{DiskPoint::polar(1.0, 0.3)};
    CHECK_THROWS_AS(fourier_coefficient(boundary, {1}, 16), std::invalid_argument);
}

TEST_CASE("Kronecker line") {
    const std::vector<Rational> tau{Rational(2), Rational(4)};
    const auto at_zero = kronecker_line(tau, 0.0);
    CHECK(at_zero == PhaseTuple{0.0, 0.0});

    const auto line = kronecker_line(tau, M_PI / 2);
    CHECK(std::abs(std::polar(1.0, line[0]) - cplx{-1.0, 0.0}) <= 1e-12);
    CHECK(std::abs(std::polar(1.0, line[1]) - cplx{1.0, 0.0}) <= 1e-12);

    // periodicity in sigma holds exactly when every tau_j is an integer
    for (double sigma : {0.3, 1.7}) {
        const auto a = kronecker_line(tau, sigma);
        const auto b = kronecker_line(tau, sigma + 2.0 * M_PI);
        for (std::size_t j = 0; j < tau.size(); ++j)
            CHECK(std::abs(std::polar(1.0, a[j]) - std::polar(1.0, b[j])) <= 1e-12);
    }
}

TEST_CASE("backward spectrum") {
    const auto single = make_params({Rational(2)}, {Rational(1, 2)});
    for (double sigma : {0.0, 0.37, 2.9}) {
        const auto value = backward_spectrum(single, sigma);
        CHECK(std::abs(value - 0.5 * std::polar(1.0, 2.0 * sigma)) <= 1e-14);
    }

    const auto medium = make_params({Rational(2), Rational(4), Rational(1)},
                                    {Rational(1, 2), Rational(-1, 3), Rational(7, 10)});
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> sigma_dist(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i)
        CHECK(std::abs(backward_spectrum(medium, sigma_dist(rng))) <= 1.0);

    CHECK(std::abs(backward_spectrum(medium, 0.0).imag()) <= 1e-15);
}

TEST_CASE("truncation error") {
    const auto single = make_params({Rational(2)}, {Rational(1, 2)});
    std::vector<double> sigmas{0.0, 0.5, 1.0, 2.0};
    for (double err : truncation_error(single, Rational(3), sigmas)) CHECK(err <= 1e-14);

    // empty truncation: the error is the spectrum modulus itself
    const auto errs = truncation_error(single, Rational(1), sigmas);
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        CHECK(errs[i] == doctest::Approx(std::abs(backward_spectrum(single, sigmas[i])))
                             .epsilon(1e-14));
}

TEST_CASE("PDE residuals vanish to discretization accuracy") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> radius(0.1, 0.45);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);

    for (int n = 1; n <= 3; ++n) {
        DiskTuple w;
        PhaseTuple z;
        for (int j = 0; j < n; ++j) {
            w.push_back(DiskPoint::polar(radius(rng), angle(rng)));
            z.push_back(angle(rng));
        }
        for (int j = 1; j <= n; ++j) {
            const auto res = pde_residual(w, z, j, 1e-3);
            CHECK(res.wave <= 1e-6);
            CHECK(res.coupling <= 1e-6);
            CHECK(res.quadratic <= 1e-6);
        }
    }
}

TEST_CASE("PDE residual second-order convergence on a generic point") {
    DiskTuple w{DiskPoint::polar(0.35, 0.8), DiskPoint::polar(0.3, 2.2),
                DiskPoint::polar(0.4, 4.0)};
    PhaseTuple z{0.7, 1.9, 5.1};
    for (int j = 1; j <= 3; ++j) {
        const auto coarse = pde_residual(w, z, j, 1e-3);
        const auto fine = pde_residual(w, z, j, 5e-4);
        for (auto [c, f] : {std::pair{coarse.wave, fine.wave},
                            std::pair{coarse.coupling, fine.coupling},
                            std::pair{coarse.quadratic, fine.quadratic}}) {
            if (c < 5e-8) {
                CHECK(f < 5e-8);  // at or below the roundoff floor on both grids
                continue;
            }
            CHECK(c / f == doctest::Approx(4.0).epsilon(0.15));
        }
    }
}

TEST_CASE("PDE residual stencil containment") {
    DiskTuple w{DiskPoint::polar(0.995, 0.3)};
    PhaseTuple z{0.1};
    CHECK_THROWS_AS(pde_residual(w, z, 1, 1e-3), std::invalid_argument);

    DiskTuple tiny{DiskPoint::polar(0.005, 0.3)};
    CHECK_THROWS_AS(pde_residual(tiny, z, 1, 1e-3), std::invalid_argument);
}
