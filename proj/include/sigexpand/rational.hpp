#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include "sigexpand/error.hpp"

namespace sigx {

// Exact arithmetic backbone. Combination coefficients are big integers,
// everything ring-valued is a big rational; no floating point sneaks in
// until an explicit eval call.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long p, long q = 1) { return Rational(p, q); }

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Every finite double is a dyadic rational; this conversion is exact.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ConfigError("non-finite number where an exact value is required");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 mantissa bits make m * 2^53 integral.
    Int mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(Int(1) << exp);
    } else {
        r /= Rational(Int(1) << -exp);
    }
    return r;
}

// Accepts "p/q", plain integers, and decimal strings such as "-0.25".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ConfigError("empty string is not a rational");
    const auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            Int p(s.substr(0, slash));
            Int q(s.substr(slash + 1));
            if (q == 0) throw ConfigError("zero denominator in \"" + s + "\"");
            return Rational(p, q);
        }
        const auto dot = s.find('.');
        if (dot == std::string::npos) return Rational(Int(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const int frac = static_cast<int>(s.size() - dot - 1);
        Int q = 1;
        for (int i = 0; i < frac; ++i) q *= 10;
        return Rational(Int(digits), q);
    } catch (const std::exception&) {
        throw ConfigError("cannot parse rational \"" + s + "\"");
    }
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;  // prints "p/q" or "p"
    return os.str();
}

}  // namespace sigx
