#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartinc/unipoly.hpp"

namespace cartinc {

/// Sparse bivariate polynomial f(x, y) over an exact field K.
/// Terms map (i, j) -> nonzero coefficient of x^i y^j; the total degree
/// max(i + j) is the degree used everywhere (it is the curve degree).
template <typename K>
class BivariatePoly {
public:
    using ExpPair = std::pair<int, int>;

    BivariatePoly() = default;

    static BivariatePoly from_terms(const std::vector<std::pair<ExpPair, K>>& terms) {
        BivariatePoly f;
        for (const auto& [e, c] : terms) {
            if (e.first < 0 || e.second < 0)
                fail(Err::InvalidArgument, "negative exponent in polynomial term");
            f.add_term(e.first, e.second, c);
        }
        return f;
    }
    static BivariatePoly zero() { return BivariatePoly(); }
    static BivariatePoly constant(K c) {
        BivariatePoly f;
        f.add_term(0, 0, std::move(c));
        return f;
    }
    static BivariatePoly monomial(int i, int j, K c) {
        BivariatePoly f;
        f.add_term(i, j, std::move(c));
        return f;
    }
    static BivariatePoly var_x() { return monomial(1, 0, field_from_int<K>(1)); }
    static BivariatePoly var_y() { return monomial(0, 1, field_from_int<K>(1)); }

    void add_term(int i, int j, const K& c) {
        if (is_zero(c)) return;
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            terms_.emplace(ExpPair{i, j}, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero_poly() const { return terms_.empty(); }
    const std::map<ExpPair, K>& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
        return d;
    }
    int degree_x() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    int degree_y() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    K evaluate(const K& x, const K& y) const {
        // Group by x-exponent, Horner in x over Horner-in-y fibers would need
        // dense storage; with sparse terms, power caching is simpler and exact.
        K acc{};
        std::vector<K> xp = powers(x, degree_x());
        std::vector<K> yp = powers(y, degree_y());
        for (const auto& [e, c] : terms_) acc = acc + c * xp[e.first] * yp[e.second];
        return acc;
    }

    /// Coefficient polynomials c_j(x) with f = sum_j c_j(x) y^j.
    std::vector<UnivariatePoly<K>> y_coefficients() const {
        int dy = degree_y();
        std::vector<std::vector<K>> rows(dy + 1);
        int dx = degree_x();
        for (auto& r : rows) r.assign(dx + 1, K());
        for (const auto& [e, c] : terms_) rows[e.second][e.first] = c;
        std::vector<UnivariatePoly<K>> out;
        out.reserve(rows.size());
        for (auto& r : rows) out.emplace_back(std::move(r));
        return out;
    }
    /// Coefficient polynomials c_i(y) with f = sum_i c_i(y) x^i.
    std::vector<UnivariatePoly<K>> x_coefficients() const { return swap_xy().y_coefficients(); }

    /// The fiber f(a, y) as a univariate polynomial in y.
    UnivariatePoly<K> fiber_x(const K& a) const {
        std::vector<K> out(degree_y() + 1, K());
        std::vector<K> xp = powers(a, degree_x());
        for (const auto& [e, c] : terms_) out[e.second] = out[e.second] + c * xp[e.first];
        return UnivariatePoly<K>(std::move(out));
    }
    /// The fiber f(x, b) as a univariate polynomial in x.
    UnivariatePoly<K> fiber_y(const K& b) const { return swap_xy().fiber_x(b); }

    BivariatePoly swap_xy() const {
        BivariatePoly g;
        for (const auto& [e, c] : terms_) g.terms_.emplace(ExpPair{e.second, e.first}, c);
        return g;
    }

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, c);
        return r;
    }
    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e.first, e.second, -c);
        return r;
    }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    BivariatePoly operator-() const {
        BivariatePoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    BivariatePoly scaled(const K& s) const {
        BivariatePoly r;
        if (is_zero(s)) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + field_string(it->second) + ")";
            if (it->first.first > 0) out += "*x^" + std::to_string(it->first.first);
            if (it->first.second > 0) out += "*y^" + std::to_string(it->first.second);
        }
        return out;
    }

private:
    std::map<ExpPair, K> terms_;

    static std::vector<K> powers(const K& v, int up_to) {
        std::vector<K> p;
        p.reserve(up_to + 2);
        p.push_back(field_from_int<K>(1));
        for (int i = 0; i < std::max(up_to, 0); ++i) p.push_back(p.back() * v);
        return p;
    }
};

using RationalBiPoly = BivariatePoly<Rational>;
using GaussianBiPoly = BivariatePoly<GaussianRational>;

}  // namespace cartinc
