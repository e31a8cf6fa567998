#include "scatter/scattering_poly.hpp"

#include "scatter/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace scatter {

RadialCoeffs closed_form_radial(int p, int q) {
    if (std::min(p, q) < 0 || (p == 0 && q > 0)) return {};
    if (q == 0) {
        RadialCoeffs f(p + 1, Rational(0));
        f[p] = 1;
        return f;
    }

    const int m = std::abs(p - q);
    const int nu = std::min(p, q) - 1;
    const Rational prefactor = Rational(((q + nu + 1) % 2 == 0) ? 1 : -1) / Rational(q);

    RadialCoeffs f(m + 2 * nu + 3, Rational(0));
    for (int j = 0; j <= nu; ++j) {
        Rational c(factorial(j + nu + m + 1), factorial(j) * factorial(j + m) * factorial(nu - j));
        c.canonicalize();
        if (j % 2 == 1) c = -c;
        c *= prefactor;
        f[m + 2 * j] += c;      // from the x^m sum
        f[m + 2 * j + 2] -= c;  // from the (1 - x^2) factor
    }
    return f;
}

BivarPoly rodrigues(int p, int q) {
    if (std::min(p, q) < 1) throw std::invalid_argument("rodrigues requires min{p,q} >= 1");

    // (1 - z zbar)^{p+q-1} expanded exactly.
    const int e = p + q - 1;
    BivarPoly core;
    Rational binom(1);
    for (int i = 0; i <= e; ++i) {
        core.add_term(i, i, (i % 2 == 0) ? binom : -binom);
        binom *= Rational(e - i);
        binom /= Rational(i + 1);
    }

    BivarPoly d = core;
    for (int i = 0; i < q; ++i) d = d.d_zeta();
    for (int i = 0; i < p; ++i) d = d.d_zeta_bar();

    Rational prefactor(((p % 2 == 0) ? 1 : -1), 1);
    prefactor /= Rational(q) * Rational(factorial(e));

    const BivarPoly weight =
        BivarPoly::constant(Rational(1)) - BivarPoly::monomial(1, 1, Rational(1));
    return (weight * d) * prefactor;
}

BivarPoly lift_radial(int p, int q, const RadialCoeffs& radial) {
    const int d = p - q;
    BivarPoly out;
    for (int t = 0; t < static_cast<int>(radial.size()); ++t) {
        if (radial[t] == 0) continue;
        const int a2 = t + d;
        const int b2 = t - d;
        if (a2 < 0 || b2 < 0 || a2 % 2 != 0)
            throw InternalInconsistency("radial exponent " + std::to_string(t) +
                                        " incompatible with angular index " + std::to_string(d));
        out.add_term(a2 / 2, b2 / 2, radial[t]);
    }
    return out;
}

ScatteringPoly make_scattering_poly(int p, int q) {
    ScatteringPoly sp;
    sp.p = p;
    sp.q = q;
    sp.radial = closed_form_radial(p, q);
    sp.poly = lift_radial(p, q, sp.radial);
    if (std::min(p, q) >= 1) {
        const BivarPoly rod = rodrigues(p, q);
        if (!(rod == sp.poly))
            throw InternalInconsistency("Rodrigues and closed-form constructions disagree at (" +
                                        std::to_string(p) + "," + std::to_string(q) + ")");
    }
    return sp;
}

EigenCheckResult eigen_check(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("eigen_check requires p, q >= 1");
    const ScatteringPoly sp = make_scattering_poly(p, q);
    EigenCheckResult res;
    res.residual = hybrid_laplacian(sp.poly) + sp.poly * Rational(static_cast<long>(p) * q);
    res.ok = res.residual.is_zero();
    return res;
}

double eval_radial(const RadialCoeffs& f, double x) {
    double acc = 0.0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Rational eval_radial_exact(const RadialCoeffs& f, const Rational& x) {
    Rational acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RadialCoeffs divide_out_boundary_factor(const RadialCoeffs& f) {
    if (f.empty()) return {};
    if (f.size() < 3) throw InternalInconsistency("degree too low to carry (1 - x^2)");
    // f = (1 - x^2) g  <=>  f_t = g_t - g_{t-2}
    RadialCoeffs g(f.size() - 2, Rational(0));
    for (std::size_t t = 0; t < g.size(); ++t)
        g[t] = f[t] + (t >= 2 ? g[t - 2] : Rational(0));
    for (std::size_t t = g.size(); t < f.size(); ++t) {
        const Rational rem = f[t] + (t >= 2 ? g[t - 2] : Rational(0));
        if (rem != 0) throw InternalInconsistency("(1 - x^2) does not divide radial profile");
    }
    return g;
}

std::complex<double> inner_product(const ScatteringPoly& a, const ScatteringPoly& b,
                                   int radial_order, int angular_order) {
    if (a.p * a.q < 1 || b.p * b.q < 1)
        throw std::invalid_argument("inner_product requires pq >= 1 on both factors");
    if (radial_order < 1 || angular_order < 1)
        throw std::invalid_argument("quadrature orders must be positive");

    const RadialCoeffs ga = divide_out_boundary_factor(a.radial);
    const RadialCoeffs gb = divide_out_boundary_factor(b.radial);
    const int freq = a.angular_frequency() - b.angular_frequency();

    const auto rule = gauss_legendre_unit(radial_order);
    const double dsigma = 2.0 * M_PI / angular_order;

    std::complex<double> acc{0.0, 0.0};
    for (const auto& node : rule) {
        const double rho = node.x;
        const double radial = 4.0 * rho * (1.0 - rho * rho) *
                              eval_radial(ga, rho) * eval_radial(gb, rho) * node.w;
        std::complex<double> angular{0.0, 0.0};
        for (int mi = 0; mi < angular_order; ++mi) {
            const double sigma = dsigma * mi;
            angular += std::polar(1.0, freq * sigma);
        }
        acc += radial * angular * dsigma;
    }
    return acc;
}

bool eigenvalue_quantization(int angular_index, long eigenvalue) {
    if (angular_index < 0) throw std::invalid_argument("angular index must be nonnegative");
    if (eigenvalue < 1) return false;
    for (long nu = 1; nu * (angular_index + nu) <= eigenvalue; ++nu)
        if (nu * (angular_index + nu) == eigenvalue) return true;
    return false;
}

RadialSolution recurrence_radial(int angular_index, long eigenvalue) {
    const int m = angular_index;
    if (!eigenvalue_quantization(m, eigenvalue))
        throw std::domain_error("eigenvalue " + std::to_string(eigenvalue) +
                                " is not of the form nu*(m+nu) for m = " + std::to_string(m));

    RadialSolution sol;
    sol.angular_index = m;
    sol.eigenvalue = eigenvalue;
    sol.coeffs.assign(m + 1, Rational(0));
    sol.coeffs[m] = 1;

    for (int j = m;; j += 2) {
        const Rational num(static_cast<long>(j) * j - 4 * eigenvalue -
                           static_cast<long>(m) * m);
        const Rational den(static_cast<long>(j + 2) * (j + 2) - static_cast<long>(m) * m);
        Rational next = num / den * sol.coeffs[j];
        next.canonicalize();
        if (next == 0) break;
        sol.coeffs.resize(j + 3, Rational(0));
        sol.coeffs[j + 2] = next;
    }
    return sol;
}

nlohmann::json to_json(const ScatteringPoly& sp) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : sp.poly.terms()) {
        terms.push_back({{"a", key.first},
                         {"b", key.second},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return {{"p", sp.p}, {"q", sp.q}, {"terms", std::move(terms)}};
}

ScatteringPoly scattering_poly_from_json(const nlohmann::json& j) {
    ScatteringPoly sp = make_scattering_poly(j.at("p").get<int>(), j.at("q").get<int>());
    BivarPoly parsed;
    for (const auto& t : j.at("terms")) {
        Rational c(BigInt(t.at("num").get<std::string>()),
                   BigInt(t.at("den").get<std::string>()));
        c.canonicalize();
        parsed.add_term(t.at("a").get<int>(), t.at("b").get<int>(), c);
    }
    if (!(parsed == sp.poly))
        throw std::invalid_argument("serialized terms disagree with the (p, q) polynomial");
    return sp;
}

}  // namespace scatter
