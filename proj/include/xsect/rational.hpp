#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xsect {

namespace mp = boost::multiprecision;
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(Integer(num), Integer(den));
}

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

// "p" for integers, "p/q" otherwise; always lowest terms.
inline std::string to_string(const Rational& r) {
    Integer d = den(r);
    if (d == 1) return num(r).str();
    return num(r).str() + "/" + d.str();
}

inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer n = num(r), d = den(r);
    Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Strict parsing accepts only the canonical form produced by to_string.
// Lenient parsing also accepts a leading '+', non-reduced fractions and
// denominators of 1, and returns the reduced value.
struct RationalParse {
    std::optional<Rational> value;
    std::string error;
};

inline RationalParse parse_rational(std::string_view s, bool strict = true) {
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        if (body[0] == '+' && strict) return {std::nullopt, "leading '+' is not canonical"};
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view n = body.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!digits(n) || !digits(d)) return {std::nullopt, "malformed rational '" + std::string(s) + "'"};
    Integer ni{std::string(n)}, di{std::string(d)};
    if (di == 0) return {std::nullopt, "zero denominator"};
    Rational r(neg ? Integer(-ni) : ni, di);
    if (strict && to_string(r) != s)
        return {std::nullopt, "rational '" + std::string(s) + "' is not in lowest terms (expected " + to_string(r) + ")"};
    return {r, {}};
}

}  // namespace xsect
