#pragma once

#include "scatter/rational.hpp"

#include <complex>
#include <map>
#include <utility>

namespace scatter {

// Sparse polynomial in the commuting pair (zeta, conj zeta) with exact
// rational coefficients. Terms are keyed by the exponent pair (a, b) of
// zeta^a * conj(zeta)^b and held in lexicographic order; zero coefficients
// are never stored, so equality of term maps is equality of polynomials.
class BivarPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, Rational>;

    BivarPoly() = default;

    static BivarPoly constant(const Rational& c) { return monomial(0, 0, c); }
    static BivarPoly monomial(int a, int b, const Rational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    Rational coeff(int a, int b) const;

    void add_term(int a, int b, const Rational& c);

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly l, const BivarPoly& r) { return l += r; }
    friend BivarPoly operator-(BivarPoly l, const BivarPoly& r) { return l -= r; }
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly operator*(const Rational& c) const;
    BivarPoly operator-() const;

    BivarPoly d_zeta() const;
    BivarPoly d_zeta_bar() const;

    // Substitutes (point, conj point); terms are accumulated in the fixed
    // lexicographic order so results are reproducible bit-for-bit.
    std::complex<double> eval(std::complex<double> point) const;

    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

// (1 - zeta conj zeta) * d^2 f / (d conj zeta d zeta), exact.
BivarPoly hybrid_laplacian(const BivarPoly& f);

}  // namespace scatter
