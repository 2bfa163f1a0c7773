#pragma once

#include <array>
#include <map>

#include "cartinc/bipoly.hpp"

namespace cartinc {

/// Sparse polynomial in four variables x1..x4 over K.
template <typename K>
class QuadPoly {
public:
    using Exp = std::array<int, 4>;

    QuadPoly() = default;

    static QuadPoly constant(K c) {
        QuadPoly p;
        p.add_term({0, 0, 0, 0}, std::move(c));
        return p;
    }
    static QuadPoly variable(int idx) {
        Exp e{0, 0, 0, 0};
        e[idx] = 1;
        QuadPoly p;
        p.add_term(e, field_from_int<K>(1));
        return p;
    }

    void add_term(const Exp& e, const K& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero_poly() const { return terms_.empty(); }
    const std::map<Exp, K>& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
        return d;
    }

    K eval(const std::array<K, 4>& x) const {
        K acc{};
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (int v = 0; v < 4; ++v)
                for (int k = 0; k < e[v]; ++k) t = t * x[v];
            acc = acc + t;
        }
        return acc;
    }

    friend QuadPoly operator+(const QuadPoly& a, const QuadPoly& b) {
        QuadPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend QuadPoly operator*(const QuadPoly& a, const QuadPoly& b) {
        QuadPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    QuadPoly scaled(const K& s) const {
        QuadPoly r;
        if (is_zero(s)) return r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
        return r;
    }

    friend bool operator==(const QuadPoly& a, const QuadPoly& b) = default;

private:
    std::map<Exp, K> terms_;
};

/// The surface in R^4 associated to a complex curve Z(f): the common zero set
/// of h1 = Re f(x1+ix2, x3+ix4) and h2 = Im f(x1+ix2, x3+ix4). Both degrees
/// are at most deg(f).
struct RealSurfacePair {
    QuadPoly<Rational> h1;
    QuadPoly<Rational> h2;
    int source_degree = 0;

    /// Real image of a complex point (zx, zy).
    static std::array<Rational, 4> real_image(const GaussianRational& zx,
                                              const GaussianRational& zy) {
        return {zx.re, zx.im, zy.re, zy.im};
    }

    bool vanishes_at(const GaussianRational& zx, const GaussianRational& zy) const {
        auto v = real_image(zx, zy);
        return h1.eval(v).is_zero() && h2.eval(v).is_zero();
    }
};

/// Substitutes x -> x1 + i x2, y -> x3 + i x4 into f and splits into real and
/// imaginary parts with exact rational coefficients.
inline RealSurfacePair realify(const GaussianBiPoly& f) {
    if (f.is_zero_poly()) fail(Err::ZeroPolynomial, "realify of the zero polynomial");
    using GQuad = QuadPoly<GaussianRational>;
    const GaussianRational one(Rational(1));
    const GaussianRational iu = GaussianRational::unit_i();

    GQuad zx = GQuad::variable(0) + GQuad::variable(1).scaled(iu);
    GQuad zy = GQuad::variable(2) + GQuad::variable(3).scaled(iu);

    std::vector<GQuad> pow_x{GQuad::constant(one)};
    for (int i = 0; i < f.degree_x(); ++i) pow_x.push_back(pow_x.back() * zx);
    std::vector<GQuad> pow_y{GQuad::constant(one)};
    for (int j = 0; j < f.degree_y(); ++j) pow_y.push_back(pow_y.back() * zy);

    GQuad full;
    for (const auto& [e, c] : f.terms())
        full = full + (pow_x[e.first] * pow_y[e.second]).scaled(c);

    RealSurfacePair out;
    out.source_degree = f.degree();
    for (const auto& [e, c] : full.terms()) {
        out.h1.add_term(e, c.re);
        out.h2.add_term(e, c.im);
    }
    return out;
}

}  // namespace cartinc
