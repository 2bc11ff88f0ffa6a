#ifndef PEBBLE_RATIONAL_HPP
#define PEBBLE_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "errors.hpp"

namespace pebble {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rational(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

inline BigInt ceil_rational(const Rational& r) {
    return -floor_div(-r.numerator(), r.denominator());
}

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw resource_limit("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw invalid_parameter("rational denominator must be positive: " + s);
        return Rational(BigInt(s.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw invalid_parameter("malformed rational: " + s);
    }
}

inline Rational pow2_inverse(int e) {
    BigInt d = 1;
    d <<= e;
    return Rational(1, d);
}

} // namespace pebble

#endif
