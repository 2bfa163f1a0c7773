#include "doctest.h"

#include "cartinc/incidence.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace cartinc;
using testutil::Rng;

namespace {

GaussianRational G(long long v) { return GaussianRational(Rational(v)); }

GaussianBiPoly curve_y_minus_x() {
    GaussianBiPoly f;
    f.add_term(0, 1, G(1));
    f.add_term(1, 0, G(-1));
    return f;
}
GaussianBiPoly curve_y_plus_x() {
    GaussianBiPoly f;
    f.add_term(0, 1, G(1));
    f.add_term(1, 0, G(1));
    return f;
}
GaussianBiPoly curve_y_minus_x2() {
    GaussianBiPoly f;
    f.add_term(0, 1, G(1));
    f.add_term(2, 0, G(-1));
    return f;
}

CartesianPointSet<GaussianRational> grid(std::vector<long long> a, std::vector<long long> b) {
    std::vector<GaussianRational> av, bv;
    for (long long v : a) av.push_back(G(v));
    for (long long v : b) bv.push_back(G(v));
    return CartesianPointSet<GaussianRational>::from_values(std::move(av), std::move(bv));
}

}  // namespace

TEST_CASE("incidence graph pinned examples") {
    auto p = grid({0, 1}, {0, 1});
    CurveFamily<GaussianRational> fam({{"L", curve_y_minus_x()}});
    auto g = build_incidence_graph(p, fam);
    CHECK(g.edge_count() == 2);
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0] == IncidenceGraph::Edge{0, 0, 0});
    CHECK(g.edges()[1] == IncidenceGraph::Edge{0, 1, 1});

    auto p3 = grid({-1, 0, 1}, {-1, 0, 1});
    CurveFamily<GaussianRational> fam3({{"C1", curve_y_minus_x()},
                                        {"C2", curve_y_plus_x()},
                                        {"C3", curve_y_minus_x2()}});
    auto g3 = build_incidence_graph(p3, fam3);
    CHECK(g3.edge_count() == 9);
    for (std::size_t c = 0; c < 3; ++c) CHECK(g3.points_on_curve(c).size() == 3);

    CurveFamily<GaussianRational> none;
    CHECK(build_incidence_graph(p3, none).edge_count() == 0);
}

TEST_CASE("vertical line inside a curve hits a full column") {
    // (x - 1)(y - x): the line x = 1 makes every (1, b) incident.
    GaussianBiPoly vertical;
    vertical.add_term(1, 0, G(1));
    vertical.add_term(0, 0, G(-1));
    CurveFamily<GaussianRational> fam({{"V", vertical * curve_y_minus_x()}});
    auto p = grid({0, 1, 2}, {0, 1, 2});
    auto g = build_incidence_graph(p, fam);
    // Column x=1 gives 3, diagonal adds (0,0) and (2,2); (1,1) counted once.
    CHECK(g.edge_count() == 5);
}

TEST_CASE("deterministic edge order follows labels") {
    auto p = grid({0, 1}, {0, 1});
    CurveFamily<GaussianRational> fam({{"Z", curve_y_minus_x()}, {"A", curve_y_plus_x()}});
    auto g = build_incidence_graph(p, fam);
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edges()[0].curve == 1);  // label "A" first
    CHECK(g.edges()[1].curve == 0);
    CHECK(g.edges()[2].curve == 0);
}

TEST_CASE("incidence graph matches naive oracle on random instances") {
    Rng rng(123456);
    for (int it = 0; it < 40; ++it) {
        int na = 1 + static_cast<int>(rng.below(12));
        int nb = 1 + static_cast<int>(rng.below(12));
        auto A = testutil::distinct_values<GaussianRational>(rng, na, 8, 3);
        auto B = testutil::distinct_values<GaussianRational>(rng, nb, 8, 3);
        auto pts = CartesianPointSet<GaussianRational>::from_values(A, B);

        std::vector<LabeledCurve<GaussianRational>> curves;
        int nc = 1 + static_cast<int>(rng.below(8));
        for (int c = 0; c < nc; ++c) {
            GaussianBiPoly f;
            if (rng.below(2) == 0) {
                // Planted: a curve through one or two grid points.
                const auto& a0 = pts.A[rng.below(pts.A.size())];
                const auto& b0 = pts.B[rng.below(pts.B.size())];
                const auto& a1 = pts.A[rng.below(pts.A.size())];
                const auto& b1 = pts.B[rng.below(pts.B.size())];
                if (a0 == a1) {
                    // y - b0 shifted by a multiple of (x - a0)
                    f.add_term(0, 1, G(1));
                    f.add_term(0, 0, -b0);
                    GaussianBiPoly slope;
                    slope.add_term(1, 0, rng.gaussian(3, 2));
                    slope.add_term(0, 0, -a0 * rng.gaussian(3, 2));
                    f = f + slope - slope;  // keep degree small; line through (a0, b0)
                } else {
                    // Line through (a0,b0) and (a1,b1).
                    f.add_term(0, 1, a1 - a0);
                    f.add_term(0, 0, -b0 * (a1 - a0));
                    GaussianBiPoly dx;
                    dx.add_term(1, 0, b1 - b0);
                    dx.add_term(0, 0, -a0 * (b1 - b0));
                    f = f - dx;
                }
                if (f.is_zero_poly()) f = curve_y_minus_x();
            } else {
                f = rng.bipoly<GaussianRational>(3, 4, 4);
            }
            curves.push_back({"C" + std::to_string(c), f});
        }
        CurveFamily<GaussianRational> fam(curves);
        auto g = build_incidence_graph(pts, fam);
        auto expected = oracles::naive_incidences(pts, fam);
        REQUIRE(g.edges().size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(g.edges()[i] == expected[i]);
    }
}

TEST_CASE("kst pinned examples") {
    auto p = grid({0, 1, 2}, {0, 1, 2});

    // Duplicate curve under two labels: K_{2,2} witness.
    CurveFamily<GaussianRational> dup({{"A", curve_y_minus_x()}, {"B", curve_y_minus_x()}});
    auto g = build_incidence_graph(p, dup);
    auto w = verify_no_kst(g, 2, 2);
    REQUIRE(w.has_value());
    CHECK(w->points.size() == 2);
    CHECK(w->curves.size() == 2);

    // A single curve can never give t >= 2.
    CurveFamily<GaussianRational> single({{"A", curve_y_minus_x()}});
    CHECK(!verify_no_kst(build_incidence_graph(p, single), 2, 2).has_value());

    // s = 1: a point on >= t curves.
    CurveFamily<GaussianRational> cross({{"A", curve_y_minus_x()}, {"B", curve_y_plus_x()}});
    auto gc = build_incidence_graph(p, cross);
    auto w1 = verify_no_kst(gc, 1, 2);
    REQUIRE(w1.has_value());
    CHECK(w1->points[0] == std::pair<int, int>{0, 0});

    // t = 1: a curve with >= s points.
    auto w2 = verify_no_kst(gc, 3, 1);
    REQUIRE(w2.has_value());
    CHECK(w2->points.size() == 3);
    CHECK(!verify_no_kst(gc, 4, 1).has_value());
}

TEST_CASE("kst general s,t >= 3 path") {
    // Three horizontal lines and >= 3 shared columns: K_{3,3} on a transposed
    // setup needs the DFS path. Use y - c curves: every x shares them.
    std::vector<LabeledCurve<GaussianRational>> curves;
    for (int c = 0; c < 3; ++c) {
        GaussianBiPoly f;
        f.add_term(1, 0, G(1));
        f.add_term(0, 0, G(-c));
        curves.push_back({"V" + std::to_string(c), f});  // x = c
    }
    auto p = grid({0, 1, 2}, {0, 1, 2});
    auto g = build_incidence_graph(p, CurveFamily<GaussianRational>(curves));
    // Each vertical line holds a full column; no two curves share a point.
    CHECK(!verify_no_kst(g, 3, 3).has_value());

    // Duplicate one column three times: points (0, *) all lie on three curves.
    std::vector<LabeledCurve<GaussianRational>> dup;
    for (int c = 0; c < 3; ++c) {
        GaussianBiPoly f;
        f.add_term(1, 0, G(c + 1));
        dup.push_back({"D" + std::to_string(c), f});  // (c+1) x = 0, the line x = 0
    }
    auto gd = build_incidence_graph(p, CurveFamily<GaussianRational>(dup));
    auto w = verify_no_kst(gd, 3, 3);
    REQUIRE(w.has_value());
    CHECK(w->points.size() == 3);
    CHECK(w->curves.size() == 3);
    for (const auto& pt : w->points) CHECK(pt.first == 0);
}

TEST_CASE("kst complexity guard") {
    auto p = grid({0, 1, 2, 3, 4}, {0, 1, 2, 3, 4});
    std::vector<LabeledCurve<GaussianRational>> curves;
    for (int c = 0; c < 4; ++c) {
        GaussianBiPoly f;
        f.add_term(1, 0, G(c + 1));
        curves.push_back({"D" + std::to_string(c), f});
    }
    auto g = build_incidence_graph(p, CurveFamily<GaussianRational>(curves));
    CHECK_THROWS_AS(verify_no_kst(g, 2, 3, /*cap=*/5), WorkbenchError);
}

TEST_CASE("bezout families pass the incidence-graph form") {
    // Pairwise no common components => no K_{d^2+1, 2}.
    Rng rng(987);
    auto vals = testutil::distinct_values<GaussianRational>(rng, 8, 10, 2);
    auto pts = CartesianPointSet<GaussianRational>::from_values(vals, vals);
    for (int it = 0; it < 20; ++it) {
        auto f = rng.bipoly<GaussianRational>(2, 4, 4);
        auto g = rng.bipoly<GaussianRational>(2, 4, 4);
        if (f.degree() < 1 || g.degree() < 1) continue;
        auto summary = bezout_check(f, g);
        if (summary.common_component) continue;
        CurveFamily<GaussianRational> fam({{"F", f}, {"G", g}});
        auto graph = build_incidence_graph(pts, fam);
        int d2 = f.degree() * g.degree();
        CHECK(!verify_no_kst(graph, d2 + 1, 2).has_value());
    }
}

TEST_CASE("quadruple energy pinned examples") {
    GaussianBiPoly sum;
    sum.add_term(1, 0, G(1));
    sum.add_term(0, 1, G(1));

    std::vector<GaussianRational> zero{G(0)};
    CHECK(quadruple_energy(zero, zero, sum) == 1);

    std::vector<GaussianRational> zo{G(0), G(1)};
    CHECK(quadruple_energy(zo, zo, sum) == 6);  // values {0,1,1,2}

    // Injective on the grid: all values distinct => E = |A||B|.
    GaussianBiPoly inj;
    inj.add_term(1, 0, G(1));
    inj.add_term(0, 1, G(10));
    std::vector<GaussianRational> a{G(0), G(1), G(2)};
    CHECK(quadruple_energy(a, a, inj) == 9);
}

TEST_CASE("quadruple energy matches naive enumeration") {
    Rng rng(31415);
    for (int it = 0; it < 25; ++it) {
        auto A = testutil::distinct_values<GaussianRational>(rng, 1 + rng.below(5), 5, 2);
        auto B = testutil::distinct_values<GaussianRational>(rng, 1 + rng.below(5), 5, 2);
        auto f = rng.bipoly<GaussianRational>(2, 3, 3);
        long long e = quadruple_energy(A, B, f);
        CHECK(e == oracles::naive_energy(A, B, f));
        auto hist = value_histogram(A, B, f);
        Integer lhs = Integer(e) * Integer(static_cast<long long>(hist.size()));
        Integer np = Integer(static_cast<long long>(A.size() * B.size()));
        CHECK(lhs >= np * np);
    }
}

TEST_CASE("duplicate points rejected, zero curve rejected") {
    std::vector<GaussianRational> dup{G(1), G(1)};
    CHECK_THROWS_AS(CartesianPointSet<GaussianRational>::from_lists(dup, {G(0)}),
                    WorkbenchError);
    CHECK_THROWS_AS(CurveFamily<GaussianRational>({{"Z", GaussianBiPoly()}}), WorkbenchError);
    CHECK_THROWS_AS(CurveFamily<GaussianRational>(
                        {{"A", curve_y_minus_x()}, {"A", curve_y_plus_x()}}),
                    WorkbenchError);
}
