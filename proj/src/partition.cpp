#include "cartinc/partition.hpp"

#include <map>

namespace cartinc {

SelectedR select_r(long long d, long long m_rich, long long n_points, long long n_curves,
                   long long n_a) {
    if (d < 1 || m_rich < 1 || n_points < 1 || n_curves < 1 || n_a < 1)
        fail(Err::InvalidArgument, "select_r arguments must be >= 1");
    // Least r with r^3 * d * nC >= M * nP^2.
    Integer target = Integer(m_rich) * Integer(n_points) * Integer(n_points);
    Integer scale = Integer(d) * Integer(n_curves);
    Integer lo = 0, hi = 1;
    while (hi * hi * hi * scale < target) hi <<= 1;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) >> 1;
        if (mid * mid * mid * scale >= target)
            hi = mid;
        else
            lo = mid;
    }
    long long raw = hi.convert_to<long long>();

    SelectedR out;
    long long r = raw;
    if (r < d) {
        r = d;
        out.lower_clamped = true;
    }
    if (r > n_a) {
        r = n_a;
        out.upper_clamped = true;
    }
    out.r = static_cast<int>(std::max(1LL, r));
    return out;
}

std::vector<Rational> choose_cuts(const std::vector<Rational>& sorted_a, int r) {
    const long long n = static_cast<long long>(sorted_a.size());
    if (r < 1) fail(Err::InvalidArgument, "r must be >= 1");
    if (r > n) fail(Err::RTooLarge, "r = " + std::to_string(r) + " exceeds |A| = " +
                                        std::to_string(n));
    const long long block = (n + r - 1) / r;  // ceil(|A|/r)
    std::vector<Rational> cuts;
    for (long long edge = block; edge < n; edge += block)
        cuts.push_back((sorted_a[edge - 1] + sorted_a[edge]) / 2);
    return cuts;
}

GridPartition make_grid(const CartesianPointSet<Rational>& pts, int r) {
    GridPartition grid;
    grid.r = r;
    grid.cuts_x = choose_cuts(pts.A, r);
    grid.cuts_y = choose_cuts(pts.B, std::min<long long>(r, pts.B.size()));
    return grid;
}

std::vector<CrossingCount> gridline_crossings(const CurveFamily<Rational>& fam,
                                              const GridPartition& grid) {
    std::vector<CrossingCount> out;
    for (const auto& curve : fam.curves()) {
        auto lines = axis_parallel_lines(curve.poly);
        for (const auto& v : lines.vertical)
            for (const auto& cut : grid.cuts_x)
                if (v == cut)
                    fail(Err::DegenerateLine, "curve '" + curve.label +
                                                  "' contains the grid line x = " +
                                                  rational_string(cut));
        for (const auto& h : lines.horizontal)
            for (const auto& cut : grid.cuts_y)
                if (h == cut)
                    fail(Err::DegenerateLine, "curve '" + curve.label +
                                                  "' contains the grid line y = " +
                                                  rational_string(cut));

        const int deg = curve.poly.degree();
        auto count_on = [&](const UnivariatePoly<Rational>& fiber, char axis, int index,
                            const Rational& value) {
            if (fiber.is_zero_poly())
                fail(Err::DegenerateLine, "curve '" + curve.label + "' contains a grid line");
            int crossings =
                fiber.degree() == 0 ? 0 : sturm_count(fiber, std::nullopt, std::nullopt);
            if (crossings > deg)
                fail(Err::InvalidArgument, "crossing count exceeds curve degree (internal)");
            out.push_back({curve.label, axis, index, value, crossings});
        };

        for (std::size_t i = 0; i < grid.cuts_x.size(); ++i)
            count_on(curve.poly.fiber_x(grid.cuts_x[i]), 'x', static_cast<int>(i),
                     grid.cuts_x[i]);
        for (std::size_t i = 0; i < grid.cuts_y.size(); ++i)
            count_on(curve.poly.fiber_y(grid.cuts_y[i]), 'y', static_cast<int>(i),
                     grid.cuts_y[i]);
    }
    return out;
}

DecompositionReport decompose_incidences(const IncidenceGraph& graph,
                                         const CartesianPointSet<Rational>& pts,
                                         const GridPartition& grid,
                                         std::vector<CellCount>* cells) {
    if (graph.n_a() != static_cast<int>(pts.A.size()) ||
        graph.n_b() != static_cast<int>(pts.B.size()))
        fail(Err::InvalidArgument, "graph and point set shapes disagree");

    // Cell indices per factor element, by binary search over the cuts.
    std::vector<int> cell_a(pts.A.size()), cell_b(pts.B.size());
    for (std::size_t i = 0; i < pts.A.size(); ++i)
        cell_a[i] = GridPartition::cell_of(grid.cuts_x, pts.A[i]);
    for (std::size_t i = 0; i < pts.B.size(); ++i)
        cell_b[i] = GridPartition::cell_of(grid.cuts_y, pts.B[i]);

    std::map<std::tuple<int, int, int>, long long> groups;  // (curve, cellX, cellY)
    for (const auto& e : graph.edges()) groups[{e.curve, cell_a[e.ia], cell_b[e.ib]}]++;

    DecompositionReport rep;
    rep.total = graph.edge_count();
    for (const auto& [key, count] : groups) {
        if (count == 1)
            rep.i1 += 1;
        else
            rep.i2 += count;
        rep.per_cell_max = std::max(rep.per_cell_max, count);
        if (cells)
            cells->push_back({std::get<1>(key), std::get<2>(key),
                              graph.labels()[std::get<0>(key)], count});
    }
    if (rep.i1 + rep.i2 != rep.total)
        fail(Err::InvalidArgument, "I1 + I2 != |I| (internal error)");
    return rep;
}

}  // namespace cartinc
