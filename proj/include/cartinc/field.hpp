#pragma once

#include "cartinc/gaussian.hpp"

namespace cartinc {

// Helpers shared by the polynomial layer: both coordinate fields (Q and Q(i))
// sit over a Euclidean ring of integers (Z resp. Z[i]), which is what makes
// fraction-free resultants and primitive remainder sequences work.

inline Integer denominator_lcm_acc(Integer acc, const Rational& x) {
    return int_lcm(std::move(acc), denom(x));
}
inline Integer denominator_lcm_acc(Integer acc, const GaussianRational& x) {
    return int_lcm(int_lcm(std::move(acc), denom(x.re)), denom(x.im));
}

/// Content step on integral values: gcd in Z (as a Rational).
inline Rational integral_gcd(const Rational& a, const Rational& b) {
    return Rational(int_gcd(numer(a), numer(b)));
}
/// Content step on Gaussian integers: gcd in Z[i], canonical associate.
inline GaussianRational integral_gcd(const GaussianRational& a, const GaussianRational& b) {
    return gaussian_int_gcd(a, b);
}

/// Multiplier u such that lead*u is "unit-canonical": positive in Q,
/// in the closed first quadrant (re > 0, im >= 0) in Q(i).
inline Rational unit_normal_factor(const Rational& lead) {
    return lead < 0 ? Rational(-1) : Rational(1);
}
inline GaussianRational unit_normal_factor(const GaussianRational& lead) {
    GaussianRational u(Rational(1));
    GaussianRational v = lead;
    for (int k = 0; k < 4; ++k) {
        if (v.re > 0 && v.im >= 0) return u;
        v = v * GaussianRational::unit_i();
        u = u * GaussianRational::unit_i();
    }
    return u;
}

template <typename K>
K field_inv(const K& x);
template <>
inline Rational field_inv<Rational>(const Rational& x) {
    return rat_inv(x);
}
template <>
inline GaussianRational field_inv<GaussianRational>(const GaussianRational& x) {
    return x.inv();
}

template <typename K>
inline K field_from_int(long long v) {
    return K(Rational(v));
}
template <>
inline Rational field_from_int<Rational>(long long v) {
    return Rational(v);
}

}  // namespace cartinc
