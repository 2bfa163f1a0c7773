#include "cartinc/apps.hpp"

#include <mutex>
#include <unordered_set>
#include <set>

namespace cartinc {

namespace {

std::vector<GaussianRational> sorted_unique(std::vector<GaussianRational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string padded(const char* prefix, std::size_t i, std::size_t width = 5) {
    std::string n = std::to_string(i);
    return std::string(prefix) + std::string(width > n.size() ? width - n.size() : 0, '0') + n;
}

Rational ratio_against_root(long long observed, long long n, unsigned p, unsigned q) {
    // observed / n^(p/q), 6 significant digits.
    PowerValue denom_val = integer_root_value(boost::multiprecision::pow(Integer(n), p), q);
    return round_sig(Rational(observed) / denom_val.value);
}

}  // namespace

std::vector<InversionMap> rich_inversions(std::vector<GaussianRational> A, int k) {
    if (k < 2) fail(Err::KTooSmall, "pair-derived enumeration needs k >= 2");
    A = sorted_unique(std::move(A));
    if (A.size() < 2) fail(Err::InvalidArgument, "rich_inversions needs |A| >= 2");

    std::unordered_set<GaussianRational, GaussianHash> members(A.begin(), A.end());
    const std::size_t n = A.size();

    // Ordered pairs of mapping pairs, parallel over the first pair.
    std::set<std::pair<GaussianRational, GaussianRational>> candidates;
    std::mutex merge_mutex;
    detail::parallel_over(n * n, true, [&](std::size_t pair_index) {
        const GaussianRational& x = A[pair_index / n];
        const GaussianRational& y = A[pair_index % n];
        std::set<std::pair<GaussianRational, GaussianRational>> local;
        for (const GaussianRational& xp : A) {
            for (const GaussianRational& yp : A) {
                if (y == yp) continue;
                GaussianRational b = (yp * xp - y * x) / (y - yp);
                GaussianRational a = y * (x + b);
                if (a.is_zero()) continue;
                local.emplace(a, b);
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        candidates.merge(local);
    });

    std::vector<InversionMap> maps;
    for (const auto& [a, b] : candidates) {
        int rich = 0;
        for (const GaussianRational& z : A) {
            GaussianRational w = z + b;
            if (w.is_zero()) continue;  // pole contributes nothing
            if (members.count(a / w)) ++rich;
        }
        if (rich >= k) maps.push_back({a, b, rich});
    }
    return maps;  // candidate set was ordered, so maps are sorted by (a, b)
}

CurveFamily<GaussianRational> inversion_curves(const std::vector<InversionMap>& maps) {
    std::vector<LabeledCurve<GaussianRational>> curves;
    curves.reserve(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        GaussianBiPoly f;  // y(x + b) - a
        f.add_term(1, 1, GaussianRational(Rational(1)));
        f.add_term(0, 1, maps[i].b);
        f.add_term(0, 0, -maps[i].a);
        curves.push_back({padded("M", i), f});
    }
    return CurveFamily<GaussianRational>(std::move(curves));
}

InversionReport inversion_app(std::vector<GaussianRational> A, int k, long long cap) {
    A = sorted_unique(std::move(A));
    InversionReport rep;
    rep.n = static_cast<long long>(A.size());
    rep.k = k;

    auto maps = rich_inversions(A, k);
    rep.map_count = static_cast<long long>(maps.size());

    auto fam = inversion_curves(maps);
    auto pts = CartesianPointSet<GaussianRational>::from_values(A, A);
    auto graph = build_incidence_graph(pts, fam);
    rep.incidence_total = graph.edge_count();

    rep.richness_pass = true;
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (static_cast<int>(graph.points_on_curve(static_cast<int>(i)).size()) !=
            maps[i].richness || maps[i].richness < k)
            rep.richness_pass = false;

    rep.kst_pass = !verify_no_kst(graph, 2, 3, cap).has_value();
    rep.ratio_k3_n4 =
        round_sig(Rational(rep.map_count) * Rational(Integer(k) * Integer(k) * Integer(k)) /
                  Rational(boost::multiprecision::pow(Integer(rep.n), 4)));
    return rep;
}

ExpansionReport sumset_expander(std::vector<GaussianRational> A, long long cap) {
    A = sorted_unique(std::move(A));
    if (A.empty()) fail(Err::InvalidArgument, "sumset_expander needs a nonempty set");
    for (const auto& a : A)
        if (a.is_zero()) fail(Err::ZeroInA, "0 has no inverse; remove it from A");

    const long long n = static_cast<long long>(A.size());
    std::vector<GaussianRational> inv;
    inv.reserve(A.size());
    for (const auto& a : A) inv.push_back(a.inv());

    std::vector<GaussianRational> sum, inv_sum, mixed;
    for (const auto& a : A)
        for (const auto& b : A) sum.push_back(a + b);
    for (const auto& a : inv)
        for (const auto& b : inv) inv_sum.push_back(a + b);
    for (const auto& a : A)
        for (const auto& b : inv) mixed.push_back(a + b);
    sum = sorted_unique(std::move(sum));
    inv_sum = sorted_unique(std::move(inv_sum));
    mixed = sorted_unique(std::move(mixed));

    ExpansionReport rep;
    rep.n = n;
    rep.size_sum = static_cast<long long>(sum.size());
    rep.size_inv_sum = static_cast<long long>(inv_sum.size());
    rep.size_mixed = static_cast<long long>(mixed.size());

    // Curves C_ab = Z((x - a)(y - 1/b) - 1) on P = (A+A) x (1/A + 1/A).
    std::vector<LabeledCurve<GaussianRational>> curves;
    const GaussianRational one(Rational(1));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j) {
            GaussianBiPoly f;
            f.add_term(1, 1, one);
            f.add_term(1, 0, -inv[j]);
            f.add_term(0, 1, -A[i]);
            f.add_term(0, 0, A[i] * inv[j] - one);
            curves.push_back({padded("C", i * A.size() + j), f});
        }
    CurveFamily<GaussianRational> fam(std::move(curves));
    auto pts = CartesianPointSet<GaussianRational>::from_values(sum, inv_sum);
    auto graph = build_incidence_graph(pts, fam);
    rep.curves_checked = static_cast<long long>(fam.size());
    rep.incidence_total = graph.edge_count();

    // Richness: the proof's witnesses (a + a', 1/a' + 1/b) must sit on the
    // curve, and the graph must report at least |A| incidences per curve.
    rep.richness_pass = true;
    for (std::size_t i = 0; i < A.size() && rep.richness_pass; ++i)
        for (std::size_t j = 0; j < A.size() && rep.richness_pass; ++j) {
            const auto& f = fam[i * A.size() + j].poly;
            for (const auto& ap : A) {
                GaussianRational x = A[i] + ap;
                GaussianRational y = ap.inv() + inv[j];
                if (!f.evaluate(x, y).is_zero()) rep.richness_pass = false;
            }
            if (static_cast<long long>(
                    graph.points_on_curve(static_cast<int>(i * A.size() + j)).size()) < n)
                rep.richness_pass = false;
        }
    if (rep.incidence_total < n * n * n) rep.richness_pass = false;

    rep.kst_pass = !verify_no_kst(graph, 2, 3, cap).has_value();
    rep.ratio_mixed_n54 = ratio_against_root(rep.size_mixed, n, 5, 4);
    rep.ratio_product_n52 =
        round_sig(Rational(Integer(rep.size_sum) * Integer(rep.size_inv_sum)) /
                  integer_root_value(boost::multiprecision::pow(Integer(n), 5), 2).value);
    return rep;
}

template <typename K>
DistanceReport<K> line_distance_set(std::vector<K> A, std::vector<K> B, const K& m,
                                    long long cap) {
    if (is_zero(m)) fail(Err::DegenerateSlope, "m = 0 is the parallel/orthogonal case");
    const K one = field_from_int<K>(1);
    const K m2p1 = m * m + one;
    if (is_zero(m2p1))
        fail(Err::DegenerateSlope, "1 + m^2 = 0 degenerates the distance form");
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    std::sort(B.begin(), B.end());
    B.erase(std::unique(B.begin(), B.end()), B.end());
    if (A.size() != B.size() || A.empty())
        fail(Err::InvalidArgument, "line_distance_set needs |A| = |B| >= 1");
    const long long n = static_cast<long long>(A.size());

    // f(x, y) = (x - y)^2 + m^2 y^2
    BivariatePoly<K> f;
    f.add_term(2, 0, one);
    f.add_term(1, 1, -field_from_int<K>(2));
    f.add_term(0, 2, m * m + one);

    auto hist = value_histogram(A, B, f);
    DistanceReport<K> rep;
    rep.n = n;
    rep.slope = m;
    rep.distance_count = static_cast<long long>(hist.size());
    for (const auto& [v, c] : hist) rep.energy += c * c;

    Integer n4 = boost::multiprecision::pow(Integer(n), 4);
    rep.energy_floor = make_rational(n4, Integer(rep.distance_count));
    if (Integer(rep.energy) * Integer(rep.distance_count) < n4)
        fail(Err::InvalidArgument, "energy floor violated (internal error)");

    // Hyperbolas C_{bb'} = Z((x-b)^2 - (y-b')^2 - m^2(b'^2 - b^2)), b != b'.
    std::vector<LabeledCurve<K>> curves;
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (i == j) continue;  // C_bb are ignored, as their count is trivial
            const K& b = B[i];
            const K& bp = B[j];
            BivariatePoly<K> g;
            g.add_term(2, 0, one);
            g.add_term(1, 0, -field_from_int<K>(2) * b);
            g.add_term(0, 2, -one);
            g.add_term(0, 1, field_from_int<K>(2) * bp);
            g.add_term(0, 0, m2p1 * (b * b - bp * bp));
            curves.push_back({padded("H", i * B.size() + j), g});
        }
    CurveFamily<K> fam(std::move(curves));
    auto pts = CartesianPointSet<K>::from_values(A, A);
    auto graph = build_incidence_graph(pts, fam);
    rep.kst_pass = !verify_no_kst(graph, 2, 3, cap).has_value();
    rep.ratio_n43 = ratio_against_root(rep.distance_count, n, 4, 3);
    return rep;
}

template DistanceReport<Rational> line_distance_set<Rational>(std::vector<Rational>,
                                                              std::vector<Rational>,
                                                              const Rational&, long long);
template DistanceReport<GaussianRational> line_distance_set<GaussianRational>(
    std::vector<GaussianRational>, std::vector<GaussianRational>, const GaussianRational&,
    long long);

}  // namespace cartinc
