#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cartinc/bipoly.hpp"

namespace cartinc {

/// P = A x B, stored as the two factor sets only; the product is iterated,
/// never materialized. Factor sets are sorted and duplicate-free.
template <typename K>
struct CartesianPointSet {
    std::vector<K> A;
    std::vector<K> B;

    /// Sorts and rejects duplicates (the strict path used by file input).
    static CartesianPointSet from_lists(std::vector<K> a, std::vector<K> b) {
        CartesianPointSet p{std::move(a), std::move(b)};
        p.sort_and_check("A", p.A);
        p.sort_and_check("B", p.B);
        return p;
    }

    /// Sorts and silently deduplicates (set semantics for generated data).
    static CartesianPointSet from_values(std::vector<K> a, std::vector<K> b) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        return CartesianPointSet{std::move(a), std::move(b)};
    }

    long long point_count() const {
        return static_cast<long long>(A.size()) * static_cast<long long>(B.size());
    }

private:
    static void sort_and_check(const char* name, std::vector<K>& v) {
        std::vector<K> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1])
                fail(Err::DuplicatePoint, std::string(name) + " contains duplicate value " +
                                              field_string(sorted[i]));
        v = std::move(sorted);
    }
};

template <typename K>
struct LabeledCurve {
    std::string label;
    BivariatePoly<K> poly;
};

/// A finite family of labeled curves; every polynomial is nonzero and labels
/// are unique. max_degree is the maximum total degree over the family.
template <typename K>
class CurveFamily {
public:
    CurveFamily() = default;
    explicit CurveFamily(std::vector<LabeledCurve<K>> curves) : curves_(std::move(curves)) {
        std::set<std::string> seen;
        for (const auto& c : curves_) {
            if (c.poly.is_zero_poly())
                fail(Err::ZeroPolynomial, "curve '" + c.label + "' is the zero polynomial");
            if (!seen.insert(c.label).second)
                fail(Err::InvalidArgument, "duplicate curve label '" + c.label + "'");
            max_degree_ = std::max(max_degree_, c.poly.degree());
        }
    }

    const std::vector<LabeledCurve<K>>& curves() const { return curves_; }
    std::size_t size() const { return curves_.size(); }
    bool empty() const { return curves_.empty(); }
    const LabeledCurve<K>& operator[](std::size_t i) const { return curves_[i]; }
    int max_degree() const { return max_degree_; }

    /// Curve indices ordered by label; fixes the deterministic edge order.
    std::vector<int> label_order() const {
        std::vector<int> idx(curves_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(), [this](int a, int b) {
            return curves_[a].label < curves_[b].label;
        });
        return idx;
    }

private:
    std::vector<LabeledCurve<K>> curves_;
    int max_degree_ = 0;
};

}  // namespace cartinc
