#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <string>
#include <vector>

#include "ymick/error.hpp"

namespace ymick {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar, kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Construct p/q exactly. The two-argument cpp_rational constructor is a
// (value, precision) overload, so construction must go through division.
inline Rational rat(long long p, long long q = 1) {
    if (q == 0) throw PoleEncountered("rat: denominator is zero");
    return Rational(Integer(p)) / Rational(Integer(q));
}

inline Rational rat(const Integer& p, const Integer& q) {
    if (q == 0) throw PoleEncountered("rat: denominator is zero");
    return Rational(p) / Rational(q);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Formats as "p" for integers and "p/q" otherwise; a leading minus sign
// always sits on the numerator.
inline std::string rat_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) s += "/" + denominator(r).str();
    return s;
}

inline Rational rat_parse(const std::string& text) {
    auto bad = [&text]() {
        throw Error("ParseError", "not a rational: '" + text + "'");
    };
    std::string s = text;
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto check_int = [&bad](const std::string& part) {
        if (part.empty()) bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d == 0) throw PoleEncountered("rat_parse: denominator is zero");
    return Rational(Integer(num)) / Rational(d);
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw PoleEncountered("rat_pow: negative power of zero");
        return Rational(1) / rat_pow(base, -exp);
    }
    Rational acc(1), b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

inline Integer factorial(unsigned n) {
    Integer acc(1);
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Integer binom(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    Integer acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= Integer(n - i);
        acc /= Integer(i + 1);
    }
    return acc;
}

using Weight = std::vector<Rational>;

inline std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += rat_str(w[i]);
    }
    return s + ")";
}

}  // namespace ymick
