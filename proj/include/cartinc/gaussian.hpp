#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cartinc/rational.hpp"

namespace cartinc {

/// Element of Q(i): re + im*i with exact rational parts.
/// Immutable value semantics; all operations are exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long long r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational inv() const {
        if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
        Rational n = norm();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

    /// Lexicographic (re, im); a deterministic total order, not numeric.
    friend std::strong_ordering operator<=>(const GaussianRational& a,
                                            const GaussianRational& b) {
        if (a.re < b.re) return std::strong_ordering::less;
        if (b.re < a.re) return std::strong_ordering::greater;
        if (a.im < b.im) return std::strong_ordering::less;
        if (b.im < a.im) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// Canonical GR-grammar string: "3/4", "-1/2+2/3i", "i", "-i", "2i", "1-1i", ...
std::string format_gaussian(const GaussianRational& g);

/// Parses the GR grammar exactly; throws ParseError with a byte offset.
/// Grammar: INT := ['-']digits ; RAT := INT ['/' digits] ;
///          GR := RAT | RAT ('+'|'-') RAT 'i' | ['-'] RAT 'i' | ['-'] 'i'.
/// No whitespace anywhere.
GaussianRational parse_gaussian(std::string_view text);

/// Gcd in Z[i] for Gaussian integers (denominator-1 values), returned as the
/// canonical associate (re > 0, im >= 0; gcd(0,0) = 0).
GaussianRational gaussian_int_gcd(const GaussianRational& a, const GaussianRational& b);

/// Exact square root within Q(i), if one exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& w);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }

std::size_t hash_gaussian(const GaussianRational& g);

struct RationalHash {
    std::size_t operator()(const Rational& r) const { return hash_rational(r); }
};
struct GaussianHash {
    std::size_t operator()(const GaussianRational& g) const { return hash_gaussian(g); }
};

template <typename K>
struct FieldHash;
template <>
struct FieldHash<Rational> : RationalHash {};
template <>
struct FieldHash<GaussianRational> : GaussianHash {};

/// Field-generic formatting: the GR grammar for both coordinate fields.
inline std::string field_string(const Rational& r) { return rational_string(r); }
inline std::string field_string(const GaussianRational& g) { return format_gaussian(g); }

inline GaussianRational to_gaussian(const Rational& r) { return GaussianRational(r); }
inline GaussianRational to_gaussian(const GaussianRational& g) { return g; }

}  // namespace cartinc
