#include "scatter/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

namespace scatter {

BigInt factorial(unsigned long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

namespace {

bool is_plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Rational parse_decimal(const std::string& s) {
    const auto dot = s.find('.');
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos || tail.empty())
        throw std::invalid_argument("malformed decimal literal: " + s);
    bool negative = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) head.erase(0, 1);
    if (head.empty()) head = "0";
    if (!is_plain_integer(head))
        throw std::invalid_argument("malformed decimal literal: " + s);

    BigInt integral(head);
    BigInt frac(tail);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
    Rational value = Rational(integral) + Rational(frac) / Rational(scale);
    if (negative) value = -value;
    value.canonicalize();
    return value;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (s.find('.') != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw std::invalid_argument("mixed decimal/fraction literal: " + text);
        return parse_decimal(s);
    }

    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_plain_integer(s))
            throw std::invalid_argument("malformed rational literal: " + text);
        Rational q(s);
        q.canonicalize();
        return q;
    }

    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_plain_integer(num) || !is_plain_integer(den))
        throw std::invalid_argument("malformed rational literal: " + text);
    const BigInt den_value(den);
    if (den_value == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q{BigInt(num), den_value};
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_float_string(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", q.get_d());
    return buf;
}

}  // namespace scatter
