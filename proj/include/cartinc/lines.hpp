#pragma once

#include <vector>

#include "cartinc/roots.hpp"

namespace cartinc {

/// Axis-parallel lines contained in a curve. Empty lists with no warning
/// certify that the realified surface has good fibers. The warning flags
/// lines whose defining value lies outside the coordinate field (the common
/// factor has roots the field cannot represent).
template <typename K>
struct AxisLines {
    std::vector<K> vertical;    // values a with the line x = a inside Z(f)
    std::vector<K> horizontal;  // values b with the line y = b inside Z(f)
    bool line_outside_field = false;
};

/// The line x = a lies in Z(f) iff a is a common root of all coefficient
/// polynomials of f as a polynomial in y, i.e. a root of their gcd.
template <typename K>
AxisLines<K> axis_parallel_lines(const BivariatePoly<K>& f) {
    if (f.is_zero_poly()) fail(Err::ZeroPolynomial, "axis_parallel_lines of zero polynomial");
    AxisLines<K> out;

    auto scan = [&out](const std::vector<UnivariatePoly<K>>& coeffs) {
        UnivariatePoly<K> g;
        for (const auto& c : coeffs) {
            g = poly_gcd(g, c);
            if (g.degree() == 0) break;
        }
        std::vector<K> values;
        if (g.degree() >= 1) {
            values = field_roots(g);
            int found = static_cast<int>(values.size());
            if (squarefree_part(g).degree() > found) out.line_outside_field = true;
        }
        return values;
    };

    out.vertical = scan(f.y_coefficients());
    out.horizontal = scan(f.x_coefficients());
    return out;
}

}  // namespace cartinc
