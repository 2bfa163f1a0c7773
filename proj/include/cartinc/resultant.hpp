#pragma once

#include <utility>
#include <vector>

#include "cartinc/bipoly.hpp"

namespace cartinc {

namespace detail {

/// Determinant of a square matrix of univariate polynomials by one-step
/// fraction-free (Bareiss) elimination with row pivoting. Divisions are exact
/// over the coefficient ring, so integral inputs never leave the ring.
template <typename K>
UnivariatePoly<K> poly_matrix_det(std::vector<std::vector<UnivariatePoly<K>>> m) {
    using Poly = UnivariatePoly<K>;
    const int n = static_cast<int>(m.size());
    if (n == 0) return Poly::constant(field_from_int<K>(1));
    int sign = 1;
    Poly prev = Poly::constant(field_from_int<K>(1));
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero_poly()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero_poly()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Poly::zero();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = Poly::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly::zero();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Clears denominators in place; returns the positive integer multiplier.
template <typename K>
Integer clear_denominators(std::vector<UnivariatePoly<K>>& polys) {
    Integer l = 1;
    for (const auto& p : polys)
        for (const auto& c : p.coeffs()) l = denominator_lcm_acc(std::move(l), c);
    if (l != 1) {
        K s = K(Rational(l));
        for (auto& p : polys) p = p.scaled(s);
    }
    return l;
}

}  // namespace detail

/// Sylvester resultant of f and g with respect to y: a polynomial in x of
/// degree at most deg(f)*deg(g), identically zero iff f and g share a factor
/// of positive y-degree. Rows carry ascending coefficients, so e.g.
/// Res_y(y - x, y + x) = -2x.
template <typename K>
UnivariatePoly<K> resultant_y(const BivariatePoly<K>& f, const BivariatePoly<K>& g) {
    using Poly = UnivariatePoly<K>;
    const int m = f.degree_y();
    const int n = g.degree_y();
    if (m <= 0 || n <= 0)
        fail(Err::DegenerateInput, "resultant_y requires positive y-degree in both inputs");

    std::vector<Poly> a = f.y_coefficients();  // a[0..m], polynomials in x
    std::vector<Poly> b = g.y_coefficients();  // b[0..n]
    Integer la = detail::clear_denominators(a);
    Integer lb = detail::clear_denominators(b);

    const int size = m + n;
    std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly::zero()));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= m; ++c) s[r][r + c] = a[c];
    for (int r = 0; r < m; ++r)
        for (int c = 0; c <= n; ++c) s[n + r][r + c] = b[c];

    Poly det = detail::poly_matrix_det(std::move(s));
    // Res(la*f, lb*g) = la^n lb^m Res(f, g); undo the clearing.
    Rational scale = Rational(1) / (Rational(boost::multiprecision::pow(la, unsigned(n))) *
                                    Rational(boost::multiprecision::pow(lb, unsigned(m))));
    return det.scaled(K(scale));
}

template <typename K>
UnivariatePoly<K> resultant_x(const BivariatePoly<K>& f, const BivariatePoly<K>& g) {
    return resultant_y(f.swap_xy(), g.swap_xy());
}

struct IntersectionSummary {
    bool common_component = false;
    /// Upper bound on the number of distinct x-coordinates of intersection
    /// points; only meaningful when common_component is false.
    int distinct_x_bound = 0;
};

/// Decides whether two curves share a component (resultant identically zero
/// in either direction, with pure-x/pure-y inputs handled directly), and
/// bounds the distinct intersection abscissae otherwise.
template <typename K>
IntersectionSummary bezout_check(const BivariatePoly<K>& f, const BivariatePoly<K>& g) {
    if (f.is_zero_poly() || g.is_zero_poly())
        fail(Err::ZeroPolynomial, "bezout_check on the zero polynomial");
    IntersectionSummary out;
    if (f.degree() == 0 || g.degree() == 0) return out;  // Z(const) is empty

    const int fy = f.degree_y(), gy = g.degree_y();
    const int fx = f.degree_x(), gx = g.degree_x();

    UnivariatePoly<K> res_y;
    bool have_res_y = false;
    if (fy > 0 && gy > 0) {
        res_y = resultant_y(f, g);
        have_res_y = true;
        if (res_y.is_zero_poly()) {
            out.common_component = true;
            return out;
        }
    }
    if (fx > 0 && gx > 0) {
        if (resultant_x(f, g).is_zero_poly()) {
            out.common_component = true;
            return out;
        }
    }

    if (have_res_y) {
        out.distinct_x_bound = std::max(squarefree_part(res_y).degree(), 0);
    } else if (fy == 0 && gy == 0) {
        // Two unions of vertical lines without a common one: empty intersection.
        out.distinct_x_bound = 0;
    } else {
        // One input is a pure-x polynomial; intersections live over its roots.
        const BivariatePoly<K>& pure = (fy == 0) ? f : g;
        out.distinct_x_bound = std::max(squarefree_part(pure.y_coefficients()[0]).degree(), 0);
    }
    return out;
}

}  // namespace cartinc
