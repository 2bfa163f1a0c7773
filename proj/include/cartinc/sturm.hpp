#pragma once

#include <optional>
#include <vector>

#include "cartinc/unipoly.hpp"

namespace cartinc {

/// Open interval bound: nullopt stands for -inf (lo) or +inf (hi).
using SturmBound = std::optional<Rational>;

/// Scales p by a positive rational so that coefficients are integral with
/// content 1. Signs are preserved, which is what Sturm chains need.
inline RationalPoly positive_primitive(const RationalPoly& p) {
    if (p.is_zero_poly()) return p;
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = int_lcm(std::move(l), denom(c));
    RationalPoly q = p.scaled(Rational(l));
    Integer g = 0;
    for (const auto& c : q.coeffs()) g = int_gcd(g, numer(c));
    return q.scaled(make_rational(1, g));
}

/// Signed remainder chain p, p', -rem(...), ... with positive rescaling.
inline std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
    std::vector<RationalPoly> chain;
    chain.push_back(positive_primitive(p));
    RationalPoly d = p.derivative();
    if (d.is_zero_poly()) return chain;
    chain.push_back(positive_primitive(d));
    while (true) {
        const RationalPoly& a = chain[chain.size() - 2];
        const RationalPoly& b = chain[chain.size() - 1];
        auto [q, r] = RationalPoly::divmod(a, b);
        (void)q;
        if (r.is_zero_poly()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

namespace detail {

inline int sign_at(const RationalPoly& p, const SturmBound& x, bool minus_inf) {
    if (p.is_zero_poly()) return 0;
    if (x) return p.eval(*x).sign();
    int s = p.leading().sign();
    if (minus_inf && p.degree() % 2 == 1) s = -s;
    return s;
}

inline int sign_variations(const std::vector<RationalPoly>& chain, const SturmBound& x,
                           bool minus_inf) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, x, minus_inf);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

}  // namespace detail

/// Number of distinct real roots of p in the open interval (lo, hi), exact.
/// Preconditions: p != 0; lo < hi; p does not vanish at a finite endpoint.
inline int sturm_count_with_chain(const std::vector<RationalPoly>& chain, const RationalPoly& p,
                                  const SturmBound& lo, const SturmBound& hi) {
    if (p.is_zero_poly()) fail(Err::DegenerateInput, "Sturm count of the zero polynomial");
    if (lo && hi && !(*lo < *hi)) fail(Err::InvalidArgument, "empty Sturm interval");
    if (lo && p.eval(*lo).is_zero())
        fail(Err::RootAtEndpoint, "polynomial vanishes at lower endpoint");
    if (hi && p.eval(*hi).is_zero())
        fail(Err::RootAtEndpoint, "polynomial vanishes at upper endpoint");
    return detail::sign_variations(chain, lo, true) - detail::sign_variations(chain, hi, false);
}

inline int sturm_count(const RationalPoly& p, const SturmBound& lo, const SturmBound& hi) {
    if (p.is_zero_poly()) fail(Err::DegenerateInput, "Sturm count of the zero polynomial");
    return sturm_count_with_chain(sturm_chain(p), p, lo, hi);
}

/// Cauchy bound: every real root of p lies strictly inside (-B, B).
inline Rational cauchy_root_bound(const RationalPoly& p) {
    if (p.is_zero_poly() || p.degree() == 0) return Rational(1);
    Rational m(0);
    Rational lead = rat_abs(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = rat_abs(p.coeff(i)) / lead;
        if (a > m) m = a;
    }
    return m + 1;
}

}  // namespace cartinc
