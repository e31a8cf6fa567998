#include "scatter/bivar_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace scatter {

BivarPoly BivarPoly::monomial(int a, int b, const Rational& c) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent in monomial");
    BivarPoly p;
    p.add_term(a, b, c);
    return p;
}

int BivarPoly::total_degree() const {
    int deg = 0;
    for (const auto& [key, c] : terms_) deg = std::max(deg, key.first + key.second);
    return deg;
}

Rational BivarPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(int a, int b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BivarPoly BivarPoly::operator*(const Rational& c) const {
    BivarPoly out;
    if (c == 0) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, -v);
    return out;
}

BivarPoly BivarPoly::d_zeta() const {
    BivarPoly out;
    for (const auto& [key, c] : terms_)
        if (key.first > 0) out.add_term(key.first - 1, key.second, c * key.first);
    return out;
}

BivarPoly BivarPoly::d_zeta_bar() const {
    BivarPoly out;
    for (const auto& [key, c] : terms_)
        if (key.second > 0) out.add_term(key.first, key.second - 1, c * key.second);
    return out;
}

std::complex<double> BivarPoly::eval(std::complex<double> point) const {
    const std::complex<double> bar = std::conj(point);
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [key, c] : terms_) {
        std::complex<double> term{c.get_d(), 0.0};
        for (int i = 0; i < key.first; ++i) term *= point;
        for (int i = 0; i < key.second; ++i) term *= bar;
        acc += term;
    }
    return acc;
}

BivarPoly hybrid_laplacian(const BivarPoly& f) {
    const BivarPoly weight =
        BivarPoly::constant(Rational(1)) - BivarPoly::monomial(1, 1, Rational(1));
    return weight * f.d_zeta().d_zeta_bar();
}

}  // namespace scatter
