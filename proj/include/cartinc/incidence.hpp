#pragma once

#include <algorithm>
#include <optional>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cartinc/pointset.hpp"
#include "cartinc/roots.hpp"

namespace cartinc {

/// Bipartite point-curve incidence graph over P = A x B. Points are indexed
/// by factor-set positions; the key of (ia, ib) is ia*|B| + ib. Edge order is
/// deterministic: by curve label, then ia, then ib.
class IncidenceGraph {
public:
    struct Edge {
        int curve;
        int ia;
        int ib;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    IncidenceGraph() = default;
    IncidenceGraph(int n_a, int n_b, std::vector<std::string> labels,
                   std::vector<std::vector<Edge>> per_curve, const std::vector<int>& label_rank)
        : n_a_(n_a), n_b_(n_b), labels_(std::move(labels)) {
        curve_points_.resize(labels_.size());
        for (std::size_t c = 0; c < labels_.size(); ++c) {
            auto& pts = curve_points_[c];
            pts.reserve(per_curve[c].size());
            for (const Edge& e : per_curve[c]) pts.push_back(point_key(e.ia, e.ib));
            std::sort(pts.begin(), pts.end());
        }
        for (int c : label_rank)
            for (const Edge& e : per_curve[c]) edges_.push_back(e);
        for (const Edge& e : edges_) point_curves_[point_key(e.ia, e.ib)].push_back(e.curve);
        for (auto& [k, v] : point_curves_) std::sort(v.begin(), v.end());
    }

    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }
    long long point_key(int ia, int ib) const {
        return static_cast<long long>(ia) * n_b_ + ib;
    }
    std::pair<int, int> key_point(long long key) const {
        return {static_cast<int>(key / n_b_), static_cast<int>(key % n_b_)};
    }

    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t curve_count() const { return labels_.size(); }

    /// Sorted point keys incident to one curve.
    const std::vector<long long>& points_on_curve(int c) const { return curve_points_[c]; }
    /// Sorted curve indices through one point (empty if none).
    std::vector<int> curves_through(long long key) const {
        auto it = point_curves_.find(key);
        return it == point_curves_.end() ? std::vector<int>{} : it->second;
    }
    const std::unordered_map<long long, std::vector<int>>& incident_points() const {
        return point_curves_;
    }

private:
    int n_a_ = 0, n_b_ = 0;
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<long long>> curve_points_;
    std::unordered_map<long long, std::vector<int>> point_curves_;
};

struct BuildOptions {
    bool parallel = true;
};

namespace detail {

/// Exact roots of the fiber polynomial that can lie in the factor set:
/// degree <= 2 is solved in closed form, higher degrees fall back to
/// evaluation over all of B. Returns candidate ib indices.
template <typename K>
void fiber_incidences(const UnivariatePoly<K>& g, const std::vector<K>& B,
                      const std::unordered_map<K, int, FieldHash<K>>& b_index,
                      std::vector<int>& out) {
    out.clear();
    const int d = g.degree();
    if (d <= 0) return;
    if (d <= 2) {
        for (const K& r : low_degree_roots(g)) {
            auto it = b_index.find(r);
            if (it != b_index.end()) out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        return;
    }
    for (std::size_t ib = 0; ib < B.size(); ++ib)
        if (is_zero(g.eval(B[ib]))) out.push_back(static_cast<int>(ib));
}

template <typename F>
void parallel_over(std::size_t n, bool parallel, F&& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (!parallel || hw <= 1 || n < 4) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    unsigned workers = std::min<std::size_t>(hw, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

/// Exact incidence graph of P = A x B against the curve family. Work is split
/// per curve; for each curve the fibers f(a, y) are specialized, so curves of
/// y-degree <= 2 cost |A| hash probes instead of |A||B| evaluations.
template <typename K>
IncidenceGraph build_incidence_graph(const CartesianPointSet<K>& pts, const CurveFamily<K>& fam,
                                     BuildOptions opts = {}) {
    std::unordered_map<K, int, FieldHash<K>> b_index;
    b_index.reserve(pts.B.size());
    for (std::size_t i = 0; i < pts.B.size(); ++i) b_index.emplace(pts.B[i], static_cast<int>(i));

    std::vector<std::vector<IncidenceGraph::Edge>> per_curve(fam.size());
    detail::parallel_over(fam.size(), opts.parallel, [&](std::size_t c) {
        const auto& curve = fam[c];
        auto ycoeffs = curve.poly.y_coefficients();
        std::vector<IncidenceGraph::Edge>& out = per_curve[c];
        std::vector<K> fib(ycoeffs.size());
        std::vector<int> hits;
        for (std::size_t ia = 0; ia < pts.A.size(); ++ia) {
            const K& a = pts.A[ia];
            for (std::size_t j = 0; j < ycoeffs.size(); ++j) fib[j] = ycoeffs[j].eval(a);
            UnivariatePoly<K> g(fib);
            if (g.is_zero_poly()) {
                // Vertical line x = a inside the curve: every b is incident.
                for (std::size_t ib = 0; ib < pts.B.size(); ++ib)
                    out.push_back({static_cast<int>(c), static_cast<int>(ia),
                                   static_cast<int>(ib)});
                continue;
            }
            detail::fiber_incidences(g, pts.B, b_index, hits);
            for (int ib : hits)
                out.push_back({static_cast<int>(c), static_cast<int>(ia), ib});
        }
    });

    std::vector<std::string> labels;
    labels.reserve(fam.size());
    for (const auto& c : fam.curves()) labels.push_back(c.label);
    return IncidenceGraph(static_cast<int>(pts.A.size()), static_cast<int>(pts.B.size()),
                          std::move(labels), std::move(per_curve), fam.label_order());
}

struct KstWitness {
    std::vector<std::pair<int, int>> points;  // (ia, ib)
    std::vector<int> curves;                  // curve indices
};

/// Searches the incidence graph for a complete bipartite K_{s,t} (s points on
/// t common curves). Returns nullopt when none exists (Pass), or a witness.
/// Pair enumeration is bounded by `cap` tests; beyond it, ComplexityGuard.
std::optional<KstWitness> verify_no_kst(const IncidenceGraph& g, int s, int t,
                                        long long cap = 100'000'000);

/// Histogram of f over A x B: exact value -> multiplicity.
template <typename K>
std::unordered_map<K, long long, FieldHash<K>> value_histogram(const std::vector<K>& A,
                                                               const std::vector<K>& B,
                                                               const BivariatePoly<K>& f) {
    std::unordered_map<K, long long, FieldHash<K>> hist;
    for (const K& a : A) {
        UnivariatePoly<K> fib = f.fiber_x(a);
        for (const K& b : B) hist[fib.eval(b)]++;
    }
    return hist;
}

/// E = #{(a,b,a',b') : f(a,b) = f(a',b')} = sum over values of multiplicity^2.
/// The Cauchy-Schwarz floor E >= (|A||B|)^2 / |image| is checked before
/// returning.
template <typename K>
long long quadruple_energy(const std::vector<K>& A, const std::vector<K>& B,
                           const BivariatePoly<K>& f) {
    auto hist = value_histogram(A, B, f);
    long long energy = 0;
    for (const auto& [v, c] : hist) energy += c * c;
    Integer lhs = Integer(energy) * Integer(static_cast<long long>(hist.size()));
    Integer pairs = Integer(static_cast<long long>(A.size()) * static_cast<long long>(B.size()));
    if (!hist.empty() && lhs < pairs * pairs)
        fail(Err::InvalidArgument, "energy lower bound violated (internal error)");
    return energy;
}

}  // namespace cartinc
