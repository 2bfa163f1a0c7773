#include "cartinc/incidence.hpp"

#include <cstdint>
#include <functional>

namespace cartinc {

namespace {

struct OpBudget {
    long long used = 0;
    long long cap;
    explicit OpBudget(long long c) : cap(c) {}
    void spend(long long n = 1) {
        used += n;
        if (used > cap)
            fail(Err::ComplexityGuard,
                 "K_{s,t} search exceeded the pair-test cap of " + std::to_string(cap));
    }
};

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<long long> sorted_intersection(const std::vector<long long>& a,
                                           const std::vector<long long>& b) {
    std::vector<long long> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

KstWitness make_witness(const IncidenceGraph& g, const std::vector<long long>& point_keys,
                        std::vector<int> curves) {
    KstWitness w;
    for (long long k : point_keys) w.points.push_back(g.key_point(k));
    w.curves = std::move(curves);
    return w;
}

/// Distinct incident point keys in ascending order (deterministic scan base).
std::vector<long long> sorted_incident_keys(const IncidenceGraph& g) {
    std::vector<long long> keys;
    keys.reserve(g.incident_points().size());
    for (const auto& [k, v] : g.incident_points()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

std::optional<KstWitness> verify_no_kst(const IncidenceGraph& g, int s, int t, long long cap) {
    if (s < 1 || t < 1) fail(Err::InvalidArgument, "K_{s,t} parameters must be >= 1");
    OpBudget budget(cap);

    if (s == 1) {
        for (long long key : sorted_incident_keys(g)) {
            budget.spend();
            auto curves = g.curves_through(key);
            if (static_cast<int>(curves.size()) >= t) {
                curves.resize(t);
                return make_witness(g, {key}, std::move(curves));
            }
        }
        return std::nullopt;
    }
    if (t == 1) {
        for (std::size_t c = 0; c < g.curve_count(); ++c) {
            budget.spend();
            const auto& pts = g.points_on_curve(static_cast<int>(c));
            if (static_cast<int>(pts.size()) >= s) {
                std::vector<long long> chosen(pts.begin(), pts.begin() + s);
                return make_witness(g, chosen, {static_cast<int>(c)});
            }
        }
        return std::nullopt;
    }

    if (t == 2) {
        // Dual counting: two curves sharing >= s points show up as a run of
        // length >= s among curve-pair keys collected over points.
        const long long n_c = static_cast<long long>(g.curve_count());
        std::vector<std::uint64_t> keys;
        for (long long pkey : sorted_incident_keys(g)) {
            const auto curves = g.curves_through(pkey);
            for (std::size_t i = 0; i < curves.size(); ++i)
                for (std::size_t j = i + 1; j < curves.size(); ++j) {
                    budget.spend();
                    keys.push_back(static_cast<std::uint64_t>(curves[i]) * n_c + curves[j]);
                }
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size();) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            if (j - i >= static_cast<std::size_t>(s)) {
                int c1 = static_cast<int>(keys[i] / n_c);
                int c2 = static_cast<int>(keys[i] % n_c);
                auto common = sorted_intersection(g.points_on_curve(c1), g.points_on_curve(c2));
                common.resize(s);
                return make_witness(g, common, {c1, c2});
            }
            i = j;
        }
        return std::nullopt;
    }

    const long long n_p = static_cast<long long>(g.n_a()) * g.n_b();

    if (s == 2) {
        // A pair of points lying on >= t curves shows up as a run of length
        // >= t among point-pair keys collected over curves.
        std::vector<std::uint64_t> keys;
        for (std::size_t c = 0; c < g.curve_count(); ++c) {
            const auto& pts = g.points_on_curve(static_cast<int>(c));
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    budget.spend();
                    keys.push_back(static_cast<std::uint64_t>(pts[i]) * n_p + pts[j]);
                }
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size();) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            if (j - i >= static_cast<std::size_t>(t)) {
                long long p1 = static_cast<long long>(keys[i] / n_p);
                long long p2 = static_cast<long long>(keys[i] % n_p);
                auto common = sorted_intersection(g.curves_through(p1), g.curves_through(p2));
                common.resize(t);
                return make_witness(g, {p1, p2}, std::move(common));
            }
            i = j;
        }
        return std::nullopt;
    }

    // General s, t >= 3: start from point pairs with >= t common curves and
    // extend along nonempty intersections, points in increasing key order.
    std::unordered_map<std::uint64_t, std::vector<int>> pair_curves;
    for (std::size_t c = 0; c < g.curve_count(); ++c) {
        const auto& pts = g.points_on_curve(static_cast<int>(c));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                budget.spend();
                pair_curves[static_cast<std::uint64_t>(pts[i]) * n_p + pts[j]].push_back(
                    static_cast<int>(c));
            }
    }
    std::vector<std::uint64_t> base_keys;
    for (const auto& [k, v] : pair_curves)
        if (static_cast<int>(v.size()) >= t) base_keys.push_back(k);
    std::sort(base_keys.begin(), base_keys.end());

    std::optional<KstWitness> found;
    std::function<bool(std::vector<long long>&, const std::vector<int>&)> extend =
        [&](std::vector<long long>& pts, const std::vector<int>& common) {
            if (static_cast<int>(pts.size()) == s) {
                std::vector<int> chosen(common.begin(), common.begin() + t);
                found = make_witness(g, pts, std::move(chosen));
                return true;
            }
            std::vector<long long> candidates;
            for (int c : common) {
                const auto& on_curve = g.points_on_curve(c);
                auto it = std::upper_bound(on_curve.begin(), on_curve.end(), pts.back());
                candidates.insert(candidates.end(), it, on_curve.end());
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (long long r : candidates) {
                budget.spend();
                auto next = sorted_intersection(common, g.curves_through(r));
                if (static_cast<int>(next.size()) < t) continue;
                pts.push_back(r);
                if (extend(pts, next)) return true;
                pts.pop_back();
            }
            return false;
        };

    for (std::uint64_t key : base_keys) {
        std::vector<long long> pts{static_cast<long long>(key / n_p),
                                   static_cast<long long>(key % n_p)};
        if (extend(pts, pair_curves[key])) return found;
    }
    return std::nullopt;
}

}  // namespace cartinc
