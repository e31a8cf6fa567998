#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scatter/bivar_poly.hpp"
#include "scatter/scattering_poly.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <random>

using namespace scatter;

namespace {

RadialCoeffs coeffs(std::initializer_list<long> values) {
    RadialCoeffs out;
    for (long v : values) out.emplace_back(v);
    return out;
}

bool radial_equal(const RadialCoeffs& a, const RadialCoeffs& b) {
    const std::size_t width = std::max(a.size(), b.size());
    for (std::size_t t = 0; t < width; ++t) {
        const Rational lhs = t < a.size() ? a[t] : Rational(0);
        const Rational rhs = t < b.size() ? b[t] : Rational(0);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("closed-form radial profiles match frozen expansions") {
    CHECK(radial_equal(closed_form_radial(3, 0), coeffs({0, 0, 0, 1})));
    CHECK(closed_form_radial(0, 2).empty());
    CHECK(closed_form_radial(-1, 3).empty());
    CHECK(radial_equal(closed_form_radial(0, 0), coeffs({1})));
    CHECK(radial_equal(closed_form_radial(1, 1), coeffs({1, 0, -1})));
    CHECK(radial_equal(closed_form_radial(1, 2), coeffs({0, -1, 0, 1})));
    CHECK(radial_equal(closed_form_radial(2, 1), coeffs({0, 2, 0, -2})));
    CHECK(radial_equal(closed_form_radial(2, 2), coeffs({1, 0, -4, 0, 3})));
    CHECK(radial_equal(closed_form_radial(3, 2), coeffs({0, 3, 0, -9, 0, 6})));
    CHECK(radial_equal(closed_form_radial(2, 3), coeffs({0, -2, 0, 6, 0, -4})));
    CHECK(radial_equal(closed_form_radial(3, 3), coeffs({1, 0, -9, 0, 18, 0, -10})));
    CHECK(radial_equal(closed_form_radial(4, 7),
                       coeffs({0, 0, 0, -20, 0, 140, 0, -336, 0, 336, 0, -120})));
}

TEST_CASE("Rodrigues construction matches frozen differentiation results") {
    BivarPoly expected_11;
    expected_11.add_term(0, 0, Rational(1));
    expected_11.add_term(1, 1, Rational(-1));
    CHECK(rodrigues(1, 1) == expected_11);

    BivarPoly expected_21;
    expected_21.add_term(1, 0, Rational(2));
    expected_21.add_term(2, 1, Rational(-2));
    CHECK(rodrigues(2, 1) == expected_21);

    BivarPoly expected_12;
    expected_12.add_term(0, 1, Rational(-1));
    expected_12.add_term(1, 2, Rational(1));
    CHECK(rodrigues(1, 2) == expected_12);

    BivarPoly expected_32;
    expected_32.add_term(1, 0, Rational(3));
    expected_32.add_term(2, 1, Rational(-9));
    expected_32.add_term(3, 2, Rational(6));
    CHECK(rodrigues(3, 2) == expected_32);

    CHECK_THROWS_AS(rodrigues(0, 1), std::invalid_argument);
}

TEST_CASE("both construction routes agree exactly up to (8, 8)") {
    for (int p = 1; p <= 8; ++p)
        for (int q = 1; q <= 8; ++q)
            CHECK(rodrigues(p, q) == lift_radial(p, q, closed_form_radial(p, q)));
}

TEST_CASE("special-case polynomials") {
    CHECK(make_scattering_poly(0, 0).poly == BivarPoly::constant(Rational(1)));
    CHECK(make_scattering_poly(-1, 3).poly.is_zero());
    CHECK(make_scattering_poly(0, 3).poly.is_zero());
    CHECK(make_scattering_poly(4, 0).poly == BivarPoly::monomial(4, 0, Rational(1)));

    const auto sp = make_scattering_poly(2, 1);
    CHECK(radial_equal(sp.radial, coeffs({0, 2, 0, -2})));
    CHECK(sp.angular_frequency() == 1);
}

TEST_CASE("angular homogeneity: a - b = p - q on every stored monomial") {
    for (int p = 0; p <= 8; ++p) {
        for (int q = 0; q <= 8; ++q) {
            const auto sp = make_scattering_poly(p, q);
            for (const auto& [key, c] : sp.poly.terms())
                CHECK(key.first - key.second == p - q);
        }
    }
}

TEST_CASE("polynomial evaluation") {
    const auto phi11 = make_scattering_poly(1, 1);
    CHECK(phi11.poly.eval({0.0, 0.0}) == std::complex<double>{1.0, 0.0});

    const auto phi21 = make_scattering_poly(2, 1);
    CHECK(std::abs(phi21.poly.eval({0.5, 0.0}) - std::complex<double>{0.75, 0.0}) < 1e-15);

    // Boundary vanishing for pq >= 1. The attainable bound scales with the
    // coefficient mass, which grows with p + q; split the tolerance bands.
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int i = 0; i < 10; ++i) {
        const auto zeta = std::polar(1.0, angle(rng));
        CHECK(std::abs(phi11.poly.eval(zeta)) <= 1e-15);
        for (int p = 1; p <= 8; ++p) {
            for (int q = 1; q <= 8; ++q) {
                const auto sp = make_scattering_poly(p, q);
                const double bound = (p <= 3 && q <= 3) ? 1e-14 : 1e-10;
                CHECK(std::abs(sp.poly.eval(zeta)) <= bound);
            }
        }
    }
}

TEST_CASE("radial and bivariate forms agree through the polar factorization") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int p = 0; p <= 5; ++p) {
        for (int q = 0; q <= 5; ++q) {
            const auto sp = make_scattering_poly(p, q);
            for (int i = 0; i < 5; ++i) {
                const double rho = radius(rng), sigma = angle(rng);
                const auto lhs = sp.poly.eval(std::polar(rho, sigma));
                const auto rhs = std::polar(1.0, (p - q) * sigma) * eval_radial(sp.radial, rho);
                CHECK(std::abs(lhs - rhs) <= 1e-12);
            }
        }
    }
}

TEST_CASE("weighted laplacian") {
    CHECK(hybrid_laplacian(BivarPoly::constant(Rational(7))).is_zero());
    CHECK(hybrid_laplacian(BivarPoly::monomial(5, 0, Rational(1))).is_zero());

    const auto phi11 = make_scattering_poly(1, 1).poly;
    CHECK(hybrid_laplacian(phi11) == phi11 * Rational(-1));
}

TEST_CASE("eigenfunction identity") {
    CHECK(eigen_check(1, 1).ok);
    CHECK(eigen_check(4, 7).ok);
    CHECK(eigen_check(3, 3).ok);
    CHECK(eigen_check(4, 7).residual.is_zero());
    CHECK_THROWS_AS(eigen_check(0, 2), std::invalid_argument);
}

TEST_CASE("inner products under the weighted area measure") {
    const auto a = make_scattering_poly(1, 1);
    const auto b = make_scattering_poly(2, 1);
    CHECK(std::abs(inner_product(a, b, 64, 64)) <= 1e-10);

    const auto c = make_scattering_poly(1, 2);
    const auto d = make_scattering_poly(2, 3);
    CHECK(std::abs(inner_product(c, d, 64, 64)) <= 1e-10);

    const auto norm = inner_product(a, a, 64, 64);
    CHECK(norm.real() > 0.0);
    CHECK(std::abs(norm.imag()) <= 1e-12);

    const auto boundary_free = make_scattering_poly(3, 0);
    CHECK_THROWS_AS(inner_product(a, boundary_free, 64, 64), std::invalid_argument);
}

TEST_CASE("boundary factor division") {
    const auto g = divide_out_boundary_factor(closed_form_radial(1, 1));
    CHECK(radial_equal(g, coeffs({1})));
    CHECK_THROWS_AS(divide_out_boundary_factor(closed_form_radial(3, 0)),
                    InternalInconsistency);
}

TEST_CASE("eigenvalue quantization") {
    CHECK(eigenvalue_quantization(0, 4));
    CHECK(eigenvalue_quantization(1, 2));
    CHECK_FALSE(eigenvalue_quantization(2, 5));
    CHECK_FALSE(eigenvalue_quantization(0, 3));
}

TEST_CASE("power-series recurrence solutions") {
    const auto sol01 = recurrence_radial(0, 1);
    CHECK(radial_equal(sol01.coeffs, coeffs({1, 0, -1})));

    const auto sol12 = recurrence_radial(1, 2);
    CHECK(radial_equal(sol12.coeffs, coeffs({0, 1, 0, -1})));

    const auto sol310 = recurrence_radial(3, 10);
    REQUIRE(sol310.coeffs.size() == 8);
    CHECK(sol310.coeffs[3] == Rational(1));
    CHECK(sol310.coeffs[5] == Rational(-5, 2));
    CHECK(sol310.coeffs[7] == Rational(3, 2));

    CHECK_THROWS_AS(recurrence_radial(0, 3), std::domain_error);
}

TEST_CASE("recurrence solutions have the stated support") {
    for (int m = 0; m <= 5; ++m) {
        for (int nu = 1; nu <= 5; ++nu) {
            const auto sol = recurrence_radial(m, static_cast<long>(nu) * (m + nu));
            REQUIRE(sol.coeffs.size() == static_cast<std::size_t>(m + 2 * nu + 1));
            CHECK(sol.coeffs[m] == Rational(1));
            CHECK(sol.coeffs[m + 2 * nu] != 0);
            for (int t = 0; t < static_cast<int>(sol.coeffs.size()); ++t)
                if (t < m || (t - m) % 2 != 0) CHECK(sol.coeffs[t] == 0);
        }
    }
}

TEST_CASE("JSON serialization round trip") {
    const auto sp = make_scattering_poly(3, 2);
    const auto j = to_json(sp);
    CHECK(j.at("p") == 3);
    CHECK(j.at("q") == 2);
    const auto round = scattering_poly_from_json(j);
    CHECK(round.poly == sp.poly);

    const auto zero = to_json(make_scattering_poly(0, 5));
    CHECK(zero.at("terms").empty());
}
