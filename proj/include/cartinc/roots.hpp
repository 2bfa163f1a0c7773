#pragma once

#include <set>
#include <vector>

#include "cartinc/resultant.hpp"
#include "cartinc/sturm.hpp"

namespace cartinc {

namespace detail {

/// Roots of a polynomial of degree <= 2 that lie in K, via the exact
/// discriminant square-root test. Complete for its degree range.
template <typename K>
std::vector<K> low_degree_roots(const UnivariatePoly<K>& p) {
    std::vector<K> out;
    if (p.degree() == 1) {
        out.push_back(-p.coeff(0) * field_inv<K>(p.coeff(1)));
    } else if (p.degree() == 2) {
        K a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        K disc = b * b - field_from_int<K>(4) * a * c;
        if (auto s = exact_sqrt(disc)) {
            K half = field_inv<K>(field_from_int<K>(2) * a);
            out.push_back((-b + *s) * half);
            if (!is_zero(*s)) out.push_back((-b - *s) * half);
        }
    }
    return out;
}

}  // namespace detail

/// All rational roots of p, each exactly verified, sorted ascending.
/// Complete: a root of p lying in Q is always found. Uses Sturm isolation
/// down to intervals narrower than the Farey spacing of the denominator
/// bound, then picks the unique simplest rational candidate.
std::vector<Rational> rational_roots(const RationalPoly& p);

/// All roots of p lying in Q(i), exactly verified, sorted by (re, im).
/// Complete; reduces to a bivariate real system solved with resultants and
/// rational root extraction.
std::vector<GaussianRational> gaussian_rational_roots(const GaussianPoly& p);

/// Field-generic dispatch used by templated callers.
inline std::vector<Rational> field_roots(const RationalPoly& p) { return rational_roots(p); }
inline std::vector<GaussianRational> field_roots(const GaussianPoly& p) {
    return gaussian_rational_roots(p);
}

}  // namespace cartinc
