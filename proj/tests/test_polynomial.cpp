#include "doctest.h"

#include "cartinc/lines.hpp"
#include "cartinc/realify.hpp"
#include "cartinc/resultant.hpp"
#include "cartinc/roots.hpp"
#include "cartinc/sturm.hpp"
#include "test_util.hpp"

using namespace cartinc;
using testutil::Rng;

namespace {

GaussianBiPoly gparse(const std::vector<std::tuple<int, int, const char*>>& terms) {
    GaussianBiPoly f;
    for (const auto& [i, j, c] : terms) f.add_term(i, j, parse_gaussian(c));
    return f;
}

// ---- Independent real-root-count oracle: Descartes bound + bisection ----
// Counts distinct real roots of a squarefree polynomial without Sturm
// machinery, by interval bisection with coefficient sign counting.

RationalPoly shift_by_one(const RationalPoly& p) {  // p(x+1)
    std::vector<Rational> c = p.coeffs();
    for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i)
        for (int j = i; j + 1 < static_cast<int>(c.size()); ++j) c[j] += c[j + 1];
    return RationalPoly(c);
}

int descartes_bound_01(const RationalPoly& p) {
    // Variations of (1+x)^n p(1/(1+x)): reverse with zero padding, then shift.
    std::vector<Rational> rev(p.degree() + 1, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) rev[p.degree() - i] = p.coeff(i);
    RationalPoly q = shift_by_one(RationalPoly(rev));
    int var = 0, prev = 0;
    for (const auto& c : q.coeffs()) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int count_roots_01(const RationalPoly& p, int depth = 0) {
    REQUIRE(depth < 64);
    int bound = descartes_bound_01(p);
    if (bound == 0) return 0;
    if (bound == 1) return 1;
    // Split at 1/2; halves rescaled back to (0,1).
    std::vector<Rational> left(p.degree() + 1), right(p.degree() + 1);
    Rational half(1, 2);
    Rational pw(1);
    for (int i = 0; i <= p.degree(); ++i) {
        left[i] = p.coeff(i) * pw;
        pw *= half;
    }
    RationalPoly pl(left);                      // p(x/2)
    RationalPoly pr = shift_by_one(pl);         // p((x+1)/2)
    int mid = p.eval(half).is_zero() ? 1 : 0;
    return count_roots_01(pl, depth + 1) + mid + count_roots_01(pr, depth + 1);
}

int oracle_real_root_count(const RationalPoly& p) {
    RationalPoly s = squarefree_part(p);
    Rational b = cauchy_root_bound(s);
    // Map (-B, B) to (0, 1): q(t) = s(-B + 2Bt).
    std::vector<Rational> comp{Rational(0), Rational(1)};
    RationalPoly q = RationalPoly::constant(s.coeff(s.degree()));
    RationalPoly lin(std::vector<Rational>{-b, 2 * b});
    for (int i = s.degree() - 1; i >= 0; --i)
        q = q * lin + RationalPoly::constant(s.coeff(i));
    return count_roots_01(q) + (s.eval(-b).is_zero() ? 1 : 0) + (s.eval(b).is_zero() ? 1 : 0);
}

}  // namespace

TEST_CASE("bivariate evaluation") {
    GaussianBiPoly line = gparse({{0, 1, "1"}, {1, 0, "-1"}});  // y - x
    CHECK(line.evaluate(GaussianRational(Rational(1)), GaussianRational(Rational(1))).is_zero());

    // y(x+b) - a with a=1, b=0 at (i, -i): (-i)(i) - 1 = 0
    GaussianBiPoly inv_curve = gparse({{1, 1, "1"}, {0, 0, "-1"}});
    CHECK(inv_curve.evaluate(parse_gaussian("i"), parse_gaussian("-i")).is_zero());

    GaussianBiPoly circle = gparse({{2, 0, "1"}, {0, 2, "1"}, {0, 0, "-1"}});
    CHECK(circle.evaluate(GaussianRational(), GaussianRational(Rational(2))) ==
          GaussianRational(Rational(3)));
}

TEST_CASE("degrees and fibers") {
    GaussianBiPoly f = gparse({{1, 1, "1"}, {2, 0, "-1"}, {0, 0, "3"}});  // xy - x^2 + 3
    CHECK(f.degree() == 2);
    CHECK(f.degree_x() == 2);
    CHECK(f.degree_y() == 1);
    auto fib = f.fiber_x(GaussianRational(Rational(2)));  // 2y - 1
    CHECK(fib.degree() == 1);
    CHECK(fib.coeff(1) == GaussianRational(Rational(2)));
    CHECK(fib.coeff(0) == GaussianRational(Rational(-1)));
}

TEST_CASE("resultant pinned examples") {
    GaussianBiPoly f = gparse({{0, 1, "1"}, {1, 0, "-1"}});  // y - x
    GaussianBiPoly g = gparse({{0, 1, "1"}, {1, 0, "1"}});   // y + x
    GaussianPoly res = resultant_y(f, g);
    GaussianPoly expected(std::vector<GaussianRational>{GaussianRational(),
                                                        GaussianRational(Rational(-2))});
    CHECK(res == expected);  // -2x

    GaussianBiPoly par = gparse({{0, 1, "1"}, {2, 0, "-1"}});  // y - x^2
    GaussianPoly r2 = resultant_y(par, f);
    CHECK(r2.eval(GaussianRational()).is_zero());
    CHECK(r2.eval(GaussianRational(Rational(1))).is_zero());
    CHECK(!r2.eval(GaussianRational(Rational(2))).is_zero());
    CHECK(r2.degree() == 2);

    GaussianBiPoly h = gparse({{0, 2, "1"}, {1, 0, "-1"}});  // y^2 - x
    CHECK(resultant_y(h, h.scaled(GaussianRational(Rational(2)))).is_zero_poly());

    CHECK_THROWS_AS(resultant_y(gparse({{1, 0, "1"}}), f), WorkbenchError);
}

TEST_CASE("resultant with fractional coefficients and resultant_x") {
    // Res_y(y - x/2, y + x) = -3x/2: the denominator-clearing rescale is undone.
    GaussianBiPoly f;
    f.add_term(0, 1, parse_gaussian("1"));
    f.add_term(1, 0, parse_gaussian("-1/2"));
    GaussianBiPoly g = gparse({{0, 1, "1"}, {1, 0, "1"}});
    GaussianPoly res = resultant_y(f, g);
    REQUIRE(res.degree() == 1);
    CHECK(res.coeff(1) == parse_gaussian("-3/2"));
    CHECK(res.coeff(0).is_zero());

    // resultant_x swaps the variable roles: Res_x(y - x, y + x) in y.
    GaussianPoly rx = resultant_x(gparse({{0, 1, "1"}, {1, 0, "-1"}}),
                                  gparse({{0, 1, "1"}, {1, 0, "1"}}));
    REQUIRE(rx.degree() == 1);
    CHECK(rx.eval(GaussianRational()).is_zero());  // meet only at y = 0
}

TEST_CASE("resultant degree bound on random pairs") {
    Rng rng(555);
    for (int it = 0; it < 100; ++it) {
        auto f = rng.bipoly<GaussianRational>(4, 5);
        auto g = rng.bipoly<GaussianRational>(4, 5);
        if (f.degree_y() < 1 || g.degree_y() < 1) continue;
        GaussianPoly res = resultant_y(f, g);
        if (!res.is_zero_poly()) CHECK(res.degree() <= f.degree() * g.degree());
    }
}

TEST_CASE("bezout_check") {
    GaussianBiPoly l1 = gparse({{0, 1, "1"}, {1, 0, "-1"}});          // y - x
    GaussianBiPoly l2 = gparse({{0, 1, "1"}, {1, 0, "1"}, {0, 0, "1"}});  // y + x + 1
    auto two_lines = bezout_check(l1, l2);
    CHECK(!two_lines.common_component);
    CHECK(two_lines.distinct_x_bound == 1);

    GaussianBiPoly par = gparse({{0, 1, "1"}, {2, 0, "-1"}});
    auto pl = bezout_check(par, l1);
    CHECK(!pl.common_component);
    CHECK(pl.distinct_x_bound == 2);

    auto shared = bezout_check(l1 * l2, l1);
    CHECK(shared.common_component);

    // Pure-x common factor is caught through the other direction.
    GaussianBiPoly vert = gparse({{1, 0, "1"}, {0, 0, "-1"}});  // x - 1
    auto mixed = bezout_check(vert * l1, vert);
    CHECK(mixed.common_component);
    auto coprime_vert = bezout_check(vert, gparse({{1, 0, "1"}, {0, 0, "-2"}}));
    CHECK(!coprime_vert.common_component);
    CHECK(coprime_vert.distinct_x_bound == 0);
}

TEST_CASE("sturm pinned examples") {
    RationalPoly x2m2(std::vector<Rational>{Rational(-2), Rational(0), Rational(1)});
    CHECK(sturm_count(x2m2, std::nullopt, std::nullopt) == 2);

    RationalPoly x2p1(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(sturm_count(x2p1, std::nullopt, std::nullopt) == 0);

    RationalPoly x3mx(std::vector<Rational>{Rational(0), Rational(-1), Rational(0), Rational(1)});
    CHECK(sturm_count(x3mx, Rational(-1, 2), Rational(2)) == 2);  // roots 0, 1

    CHECK_THROWS_AS(sturm_count(x3mx, Rational(0), Rational(2)), WorkbenchError);
    CHECK_THROWS_AS(sturm_count(x3mx, Rational(-1, 2), Rational(1)), WorkbenchError);
}

TEST_CASE("sturm agrees with descartes bisection oracle") {
    Rng rng(777);
    int checked = 0;
    for (int it = 0; checked < 100; ++it) {
        int deg = 3 + static_cast<int>(rng.below(2));
        std::vector<Rational> c(deg + 1);
        for (auto& v : c) v = rng.rational(8, 4);
        RationalPoly p(c);
        if (p.degree() < 3) continue;
        RationalPoly s = squarefree_part(p);
        CHECK(sturm_count(s, std::nullopt, std::nullopt) == oracle_real_root_count(p));
        ++checked;
    }
    // And on polynomials with planted rational roots.
    for (int it = 0; it < 60; ++it) {
        auto roots = testutil::distinct_values<Rational>(rng, 3, 10, 4);
        RationalPoly p = RationalPoly::constant(Rational(1));
        for (const auto& r : roots)
            p = p * RationalPoly(std::vector<Rational>{-r, Rational(1)});
        CHECK(sturm_count(p, std::nullopt, std::nullopt) == 3);
        CHECK(oracle_real_root_count(p) == 3);
    }
}

TEST_CASE("rational root extraction") {
    // (x - 1/2)(x - 3)(x^2 + 1), leading 2 after clearing
    RationalPoly p = RationalPoly(std::vector<Rational>{Rational(-1, 2), Rational(1)});
    p = p * RationalPoly(std::vector<Rational>{Rational(-3), Rational(1)});
    p = p * RationalPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(1, 2));
    CHECK(roots[1] == Rational(3));

    Rng rng(31337);
    for (int it = 0; it < 40; ++it) {
        auto planted = testutil::distinct_values<Rational>(rng, 4, 12, 6);
        RationalPoly q = RationalPoly::constant(Rational(rng.range(1, 5)));
        for (const auto& r : planted)
            q = q * RationalPoly(std::vector<Rational>{-r, Rational(1)});
        // Mix in an irreducible quadratic.
        q = q * RationalPoly(std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
        auto found = rational_roots(q);
        std::sort(planted.begin(), planted.end());
        CHECK(found == planted);
    }
}

TEST_CASE("gaussian rational root extraction") {
    // (x - i)(x - 2)(x + 1/2 - i) has all roots in Q(i).
    GaussianPoly p = GaussianPoly(std::vector<GaussianRational>{-parse_gaussian("i"),
                                                                GaussianRational(Rational(1))});
    p = p * GaussianPoly(std::vector<GaussianRational>{parse_gaussian("-2"),
                                                       GaussianRational(Rational(1))});
    p = p * GaussianPoly(std::vector<GaussianRational>{parse_gaussian("1/2-1i"),
                                                       GaussianRational(Rational(1))});
    auto roots = gaussian_rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(std::count(roots.begin(), roots.end(), parse_gaussian("i")) == 1);
    CHECK(std::count(roots.begin(), roots.end(), parse_gaussian("2")) == 1);
    CHECK(std::count(roots.begin(), roots.end(), parse_gaussian("-1/2+1i")) == 1);

    // x^2 + 1 over Q(i): both roots representable.
    GaussianPoly x2p1(std::vector<GaussianRational>{GaussianRational(Rational(1)),
                                                    GaussianRational(),
                                                    GaussianRational(Rational(1))});
    auto ipair = gaussian_rational_roots(x2p1);
    REQUIRE(ipair.size() == 2);

    // x^3 - 2 has no roots in Q(i).
    GaussianPoly x3m2(std::vector<GaussianRational>{parse_gaussian("-2"), GaussianRational(),
                                                    GaussianRational(),
                                                    GaussianRational(Rational(1))});
    CHECK(gaussian_rational_roots(x3m2).empty());

    Rng rng(2025);
    for (int it = 0; it < 25; ++it) {
        auto planted = testutil::distinct_values<GaussianRational>(rng, 3, 6, 3);
        GaussianPoly q = GaussianPoly::constant(rng.nonzero_gaussian(4, 2));
        for (const auto& r : planted)
            q = q * GaussianPoly(std::vector<GaussianRational>{-r, GaussianRational(Rational(1))});
        auto found = gaussian_rational_roots(q);
        std::sort(planted.begin(), planted.end());
        CHECK(found == planted);
    }
}

TEST_CASE("axis-parallel line detection") {
    // (x-1)(y-x): vertical x=1, no horizontal
    GaussianBiPoly f = gparse({{1, 0, "1"}, {0, 0, "-1"}}) *
                       gparse({{0, 1, "1"}, {1, 0, "-1"}});
    auto lines = axis_parallel_lines(f);
    REQUIRE(lines.vertical.size() == 1);
    CHECK(lines.vertical[0] == GaussianRational(Rational(1)));
    CHECK(lines.horizontal.empty());
    CHECK(!lines.line_outside_field);

    auto parab = axis_parallel_lines(gparse({{0, 1, "1"}, {2, 0, "-1"}}));
    CHECK(parab.vertical.empty());
    CHECK(parab.horizontal.empty());

    // (y-2i)(x^2+y): horizontal y=2i only
    GaussianBiPoly g = gparse({{0, 1, "1"}, {0, 0, "-2i"}}) *
                       gparse({{2, 0, "1"}, {0, 1, "1"}});
    auto glines = axis_parallel_lines(g);
    CHECK(glines.vertical.empty());
    REQUIRE(glines.horizontal.size() == 1);
    CHECK(glines.horizontal[0] == parse_gaussian("2i"));

    // (x^2-2)(y-x): vertical lines exist but lie outside Q(i).
    GaussianBiPoly h = gparse({{2, 0, "1"}, {0, 0, "-2"}}) *
                       gparse({{0, 1, "1"}, {1, 0, "-1"}});
    auto hlines = axis_parallel_lines(h);
    CHECK(hlines.vertical.empty());
    CHECK(hlines.line_outside_field);
}

TEST_CASE("axis-parallel line properties") {
    Rng rng(4242);
    for (int it = 0; it < 50; ++it) {
        auto f = rng.bipoly<GaussianRational>(3, 4);
        // Plant a vertical line half the time.
        GaussianRational a = rng.gaussian(5, 2);
        bool planted = it % 2 == 0 && f.degree() <= 2;
        if (planted) {
            GaussianBiPoly lin;
            lin.add_term(1, 0, GaussianRational(Rational(1)));
            lin.add_term(0, 0, -a);
            f = f * lin;
        }
        auto lines = axis_parallel_lines(f);
        if (planted)
            CHECK(std::count(lines.vertical.begin(), lines.vertical.end(), a) == 1);
        for (const auto& v : lines.vertical) CHECK(f.fiber_x(v).is_zero_poly());
        // A value off the list is not a vertical line (unless flagged outside-field,
        // which random rationals never hit exactly anyway).
        GaussianRational probe = rng.gaussian(7, 3);
        bool listed = std::count(lines.vertical.begin(), lines.vertical.end(), probe) > 0;
        if (!listed && !lines.line_outside_field) CHECK(!f.fiber_x(probe).is_zero_poly());
    }
}

TEST_CASE("realify pinned examples") {
    // y - x -> h1 = x3 - x1, h2 = x4 - x2
    auto pair = realify(gparse({{0, 1, "1"}, {1, 0, "-1"}}));
    QuadPoly<Rational> h1;
    h1.add_term({0, 0, 1, 0}, Rational(1));
    h1.add_term({1, 0, 0, 0}, Rational(-1));
    QuadPoly<Rational> h2;
    h2.add_term({0, 0, 0, 1}, Rational(1));
    h2.add_term({0, 1, 0, 0}, Rational(-1));
    CHECK(pair.h1 == h1);
    CHECK(pair.h2 == h2);

    // xy -> h1 = x1x3 - x2x4, h2 = x1x4 + x2x3
    auto prod = realify(gparse({{1, 1, "1"}}));
    QuadPoly<Rational> p1;
    p1.add_term({1, 0, 1, 0}, Rational(1));
    p1.add_term({0, 1, 0, 1}, Rational(-1));
    QuadPoly<Rational> p2;
    p2.add_term({1, 0, 0, 1}, Rational(1));
    p2.add_term({0, 1, 1, 0}, Rational(1));
    CHECK(prod.h1 == p1);
    CHECK(prod.h2 == p2);

    // x^2 -> h1 = x1^2 - x2^2, h2 = 2 x1 x2
    auto sq = realify(gparse({{2, 0, "1"}}));
    QuadPoly<Rational> s1;
    s1.add_term({2, 0, 0, 0}, Rational(1));
    s1.add_term({0, 2, 0, 0}, Rational(-1));
    QuadPoly<Rational> s2;
    s2.add_term({1, 1, 0, 0}, Rational(2));
    CHECK(sq.h1 == s1);
    CHECK(sq.h2 == s2);
}

TEST_CASE("realify zero-set equivalence") {
    Rng rng(60606);
    for (int it = 0; it < 30; ++it) {
        auto f = rng.bipoly<GaussianRational>(3, 4);
        auto pair = realify(f);
        CHECK(pair.h1.degree() <= f.degree());
        CHECK(pair.h2.degree() <= f.degree());
        for (int pt = 0; pt < 20; ++pt) {
            GaussianRational zx = rng.gaussian(6, 3), zy = rng.gaussian(6, 3);
            bool on_curve = f.evaluate(zx, zy).is_zero();
            CHECK(on_curve == pair.vanishes_at(zx, zy));
        }
        // Engineer a point on the curve via a linear-in-y slice when possible.
        GaussianRational a = rng.gaussian(4, 2);
        auto fib = f.fiber_x(a);
        if (fib.degree() == 1) {
            GaussianRational y0 = -fib.coeff(0) * fib.coeff(1).inv();
            CHECK(f.evaluate(a, y0).is_zero());
            CHECK(pair.vanishes_at(a, y0));
        }
    }
}
