#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cartinc/field.hpp"

namespace cartinc {

/// Dense univariate polynomial over an exact field K (Rational or
/// GaussianRational). Coefficients are stored lowest degree first; the zero
/// polynomial is the empty vector, so degree() is -1 for zero and the leading
/// coefficient is always nonzero otherwise.
template <typename K>
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePoly zero() { return UnivariatePoly(); }
    static UnivariatePoly constant(K v) {
        UnivariatePoly p;
        if (!is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }
    static UnivariatePoly monomial(int deg, K coeff) {
        UnivariatePoly p;
        if (!is_zero(coeff)) {
            p.c_.assign(deg + 1, K());
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K();
        return c_[i];
    }
    const K& leading() const { return c_.back(); }

    K eval(const K& x) const {
        K acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UnivariatePoly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * field_from_int<K>(i);
        return UnivariatePoly(std::move(d));
    }

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UnivariatePoly(std::move(r));
    }
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return UnivariatePoly(std::move(r));
    }
    UnivariatePoly operator-() const {
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UnivariatePoly(std::move(r));
    }
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return zero();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UnivariatePoly(std::move(r));
    }
    UnivariatePoly scaled(const K& s) const {
        if (is_zero(s)) return zero();
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return UnivariatePoly(std::move(r));
    }

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) = default;

    /// Euclidean division over the field: a = q*b + r with deg r < deg b.
    static std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a,
                                                            const UnivariatePoly& b) {
        if (b.is_zero_poly()) fail(Err::DivisionByZero, "polynomial division by zero");
        if (a.degree() < b.degree()) return {zero(), a};
        std::vector<K> rem = a.c_;
        std::vector<K> quot(a.degree() - b.degree() + 1, K());
        K lead_inv = field_inv<K>(b.leading());
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            K f = rem[k + b.degree()] * lead_inv;
            if (!is_zero(f)) {
                quot[k] = f;
                for (int j = 0; j <= b.degree(); ++j)
                    rem[k + j] = rem[k + j] - f * b.c_[j];
            }
        }
        return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
    }

    /// Division known to be exact; throws if a remainder shows up.
    static UnivariatePoly exact_div(const UnivariatePoly& a, const UnivariatePoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero_poly()) fail(Err::InvalidArgument, "inexact polynomial division");
        return q;
    }

    std::string to_string(const char* var = "x") const {
        if (is_zero_poly()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + field_string(c_[i]) + ")";
            if (i >= 1) out += std::string("*") + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
};

/// Scales p so all coefficients are integral (denominator 1 in each part),
/// then divides by the integral content and normalizes the leading unit.
/// Result generates the same ideal as p; zero maps to zero.
template <typename K>
UnivariatePoly<K> primitive_part(const UnivariatePoly<K>& p) {
    if (p.is_zero_poly()) return p;
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = denominator_lcm_acc(std::move(l), c);
    UnivariatePoly<K> q = p.scaled(K(Rational(l)));
    K content{};
    for (const auto& c : q.coeffs())
        if (!is_zero(c)) content = integral_gcd(content, c);
    q = q.scaled(field_inv<K>(content));
    return q.scaled(unit_normal_factor(q.leading()));
}

/// Pseudo-remainder prem(a, b) = rem(lc(b)^(deg a - deg b + 1) * a, b);
/// keeps integral coefficients integral.
template <typename K>
UnivariatePoly<K> pseudo_rem(const UnivariatePoly<K>& a, const UnivariatePoly<K>& b) {
    if (b.is_zero_poly()) fail(Err::DivisionByZero, "pseudo-division by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    K lead = b.leading();
    K mult = field_from_int<K>(1);
    for (int i = 0; i < da - db + 1; ++i) mult = mult * lead;
    auto [q, r] = UnivariatePoly<K>::divmod(a.scaled(mult), b);
    (void)q;
    return r;
}

/// Gcd via the primitive pseudo-remainder sequence; result is monic.
/// gcd(p, 0) = monic(p); gcd(0, 0) = 0.
template <typename K>
UnivariatePoly<K> poly_gcd(const UnivariatePoly<K>& a, const UnivariatePoly<K>& b) {
    UnivariatePoly<K> f = primitive_part(a);
    UnivariatePoly<K> g = primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero_poly()) {
        UnivariatePoly<K> r = primitive_part(pseudo_rem(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero_poly()) return f;
    return f.scaled(field_inv<K>(f.leading()));
}

/// p / gcd(p, p'): same distinct roots, all simple.
template <typename K>
UnivariatePoly<K> squarefree_part(const UnivariatePoly<K>& p) {
    if (p.is_zero_poly() || p.degree() == 0) return p;
    UnivariatePoly<K> g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return UnivariatePoly<K>::exact_div(p, g);
}

using RationalPoly = UnivariatePoly<Rational>;
using GaussianPoly = UnivariatePoly<GaussianRational>;

}  // namespace cartinc
