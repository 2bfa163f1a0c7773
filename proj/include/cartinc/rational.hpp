#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cartinc/error.hpp"

namespace cartinc {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, kept in canonical form by the backend:
/// denominator > 0 and gcd(|num|, den) = 1, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Builds num/den, normalizing the sign into the numerator.
/// Throws DivisionByZero for den = 0.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) fail(Err::DivisionByZero, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational rat_inv(const Rational& r) {
    if (r.is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    return make_rational(denom(r), numer(r));
}

inline int sign(const Rational& r) { return r.sign(); }
inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}
inline Integer int_lcm(const Integer& a, const Integer& b) {
    return boost::multiprecision::lcm(a, b);
}

/// Floor of a/b for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer rat_floor(const Rational& r) { return floor_div(numer(r), denom(r)); }

/// Exact integer square root, or nullopt when n is negative or not a square.
std::optional<Integer> exact_isqrt(const Integer& n);

/// Exact integer k-th root, or nullopt when none exists in Z.
std::optional<Integer> exact_iroot(const Integer& n, unsigned k);

/// Floor of n^(1/k) for n >= 0.
Integer iroot_floor(const Integer& n, unsigned k);

/// Exact square root in Q, if it exists.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Canonical "n" or "n/d" string (the RAT production of the GR grammar).
std::string rational_string(const Rational& r);

/// Decimal approximation with `sig` significant digits, rounded toward zero.
/// Deterministic; used only for convenience fields in reports.
std::string decimal_string(const Rational& r, int sig = 6);

/// The unique rational of smallest denominator in the open interval (lo, hi).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

std::size_t hash_rational(const Rational& r);

}  // namespace cartinc
