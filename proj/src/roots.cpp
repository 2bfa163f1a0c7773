#include "cartinc/roots.hpp"

#include <utility>

namespace cartinc {

namespace {

/// Picks a subdivision point in (lo, hi) where p does not vanish; a vanishing
/// candidate is itself a root and gets collected by the caller.
Rational split_point(const RationalPoly& p, const Rational& lo, const Rational& hi,
                     std::set<Rational>& roots) {
    const int tries = p.degree() + 2;
    for (int k = 1; k <= tries; ++k) {
        Rational m = lo + (hi - lo) * Rational(k, tries + 1);
        if (!p.eval(m).is_zero()) return m;
        roots.insert(m);
    }
    fail(Err::InvalidArgument, "could not find a non-root subdivision point");
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPoly& p) {
    if (p.is_zero_poly()) fail(Err::DegenerateInput, "roots of the zero polynomial");
    if (p.degree() == 0) return {};
    RationalPoly s = positive_primitive(squarefree_part(p));
    if (s.degree() <= 2) {
        auto r = detail::low_degree_roots(s);
        std::set<Rational> set(r.begin(), r.end());
        return {set.begin(), set.end()};
    }

    // s is integral and primitive: a rational root u/v in lowest terms has
    // v dividing the leading coefficient. Two rationals with denominator at
    // most a differ by at least 1/a^2, so below that width an interval holds
    // at most one candidate: the simplest rational in it.
    Integer a = boost::multiprecision::abs(numer(s.leading()));
    Rational width_limit = make_rational(1, a * a + 1);
    Rational bound = cauchy_root_bound(s);
    auto chain = sturm_chain(s);

    std::set<Rational> roots;

    // One isolated simple root in (lo, hi): walk the Stern-Brocot path of
    // simplest rationals, keeping the sign-change side. A rational root is
    // the simplest value of some subinterval along the path, so it is hit
    // exactly; otherwise the width drops under the Farey gap and certifies
    // there is none.
    auto refine = [&](Rational lo, Rational hi) {
        int lo_sign = s.eval(lo).sign();
        while (!(hi - lo < width_limit)) {
            Rational cand = simplest_rational_between(lo, hi);
            Rational v = s.eval(cand);
            if (v.is_zero()) {
                roots.insert(cand);
                return;
            }
            if (v.sign() == lo_sign)
                lo = cand;
            else
                hi = cand;
        }
        Rational cand = simplest_rational_between(lo, hi);
        if (s.eval(cand).is_zero()) roots.insert(cand);
    };

    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        int count = sturm_count_with_chain(chain, s, lo, hi);
        if (count == 0) continue;
        if (count == 1) {
            refine(lo, hi);
            continue;
        }
        Rational m = split_point(s, lo, hi, roots);
        work.emplace_back(lo, m);
        work.emplace_back(m, hi);
    }
    return {roots.begin(), roots.end()};
}

std::vector<GaussianRational> gaussian_rational_roots(const GaussianPoly& p) {
    if (p.is_zero_poly()) fail(Err::DegenerateInput, "roots of the zero polynomial");
    if (p.degree() == 0) return {};
    GaussianPoly s = primitive_part(squarefree_part(p));
    if (s.degree() <= 2) {
        auto r = detail::low_degree_roots(s);
        std::set<GaussianRational> set(r.begin(), r.end());
        return {set.begin(), set.end()};
    }

    // Substitute x -> u + iv: roots in Q(i) are the rational common zeros of
    // the real and imaginary parts of s(u + iv).
    GaussianBiPoly h;
    GaussianBiPoly line = GaussianBiPoly::var_x() +
                          GaussianBiPoly::monomial(0, 1, GaussianRational::unit_i());
    for (int k = s.degree(); k >= 0; --k) {
        h = h * line;
        h = h + GaussianBiPoly::constant(s.coeff(k));
    }
    RationalBiPoly re_part, im_part;
    for (const auto& [e, c] : h.terms()) {
        re_part.add_term(e.first, e.second, c.re);
        im_part.add_term(e.first, e.second, c.im);
    }

    std::vector<Rational> re_candidates;
    if (re_part.degree_y() > 0 && im_part.degree_y() > 0) {
        RationalPoly w = resultant_y(re_part, im_part);
        if (w.is_zero_poly())
            fail(Err::InvalidArgument, "degenerate realified system for a nonzero polynomial");
        re_candidates = rational_roots(w);
    } else if (re_part.degree_y() == 0) {
        re_candidates = rational_roots(re_part.y_coefficients()[0]);
    } else {
        re_candidates = rational_roots(im_part.y_coefficients()[0]);
    }

    std::set<GaussianRational> roots;
    for (const Rational& sigma : re_candidates) {
        RationalPoly u = re_part.fiber_x(sigma);
        RationalPoly v = im_part.fiber_x(sigma);
        RationalPoly g;
        if (u.is_zero_poly())
            g = v;
        else if (v.is_zero_poly())
            g = u;
        else
            g = poly_gcd(u, v);
        if (g.is_zero_poly() || g.degree() < 1) continue;
        for (const Rational& tau : rational_roots(g)) {
            GaussianRational z(sigma, tau);
            if (s.eval(z).is_zero()) roots.insert(z);
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace cartinc
