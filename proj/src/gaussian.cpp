#include "cartinc/gaussian.hpp"

#include <cctype>

namespace cartinc {

std::string format_gaussian(const GaussianRational& g) {
    if (g.im.is_zero()) return rational_string(g.re);
    if (g.re.is_zero()) {
        if (g.im == 1) return "i";
        if (g.im == -1) return "-i";
        return rational_string(g.im) + "i";
    }
    std::string out = rational_string(g.re);
    out += (g.im < 0) ? '-' : '+';
    out += rational_string(rat_abs(g.im));
    out += 'i';
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    bool accept(char c) {
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void error(const std::string& what) const {
        fail(Err::ParseError, what + " at byte " + std::to_string(pos), pos);
    }

    Integer digits() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            error("expected digit");
        Integer v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }

    // RAT := ['-']digits ['/' digits]
    Rational rat(bool allow_sign) {
        bool neg = false;
        if (allow_sign && accept('-')) neg = true;
        Integer num = digits();
        Integer den = 1;
        if (accept('/')) {
            std::size_t den_pos = pos;
            den = digits();
            if (den == 0)
                fail(Err::ParseError, "zero denominator at byte " + std::to_string(den_pos),
                     den_pos);
        }
        if (neg) num = -num;
        return make_rational(num, den);
    }
};

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
    Cursor c{text};
    if (c.done()) c.error("empty input");

    // ['-'] 'i'
    if (c.peek() == 'i' || (c.peek() == '-' && text.size() > 1 && text[1] == 'i')) {
        bool neg = c.accept('-');
        c.accept('i');
        if (!c.done()) c.error("trailing characters");
        return {Rational(0), Rational(neg ? -1 : 1)};
    }

    Rational first = c.rat(true);
    if (c.done()) return {first, Rational(0)};

    if (c.accept('i')) {
        if (!c.done()) c.error("trailing characters");
        return {Rational(0), first};
    }

    char sep = c.peek();
    if (sep != '+' && sep != '-') c.error("expected '+', '-' or 'i'");
    ++c.pos;
    Rational second = c.rat(true);
    if (!c.accept('i')) c.error("expected 'i'");
    if (!c.done()) c.error("trailing characters");
    if (sep == '-') second = -second;
    return {first, second};
}

namespace {

Integer round_to_nearest(const Rational& r) {
    // Nearest integer, ties toward -inf; any nearest works for the Euclidean step.
    return rat_floor(r + Rational(1, 2));
}

bool is_gaussian_integer(const GaussianRational& g) {
    return denom(g.re) == 1 && denom(g.im) == 1;
}

}  // namespace

GaussianRational gaussian_int_gcd(const GaussianRational& a0, const GaussianRational& b0) {
    if (!is_gaussian_integer(a0) || !is_gaussian_integer(b0))
        fail(Err::InvalidArgument, "gaussian_int_gcd expects Gaussian integers");
    GaussianRational a = a0, b = b0;
    while (!b.is_zero()) {
        GaussianRational q = a * b.conj();
        Rational n = b.norm();
        GaussianRational qr(Rational(round_to_nearest(q.re / n)),
                            Rational(round_to_nearest(q.im / n)));
        GaussianRational r = a - qr * b;
        a = b;
        b = r;
    }
    // Canonical associate: rotate by units into re > 0, im >= 0.
    if (a.is_zero()) return a;
    for (int k = 0; k < 4; ++k) {
        if (a.re > 0 && a.im >= 0) return a;
        a = a * GaussianRational::unit_i();
    }
    return a;  // unreachable
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& w) {
    if (w.is_zero()) return GaussianRational();
    if (w.im.is_zero()) {
        if (w.re > 0) {
            if (auto s = exact_sqrt(w.re)) return GaussianRational(*s);
            return std::nullopt;
        }
        if (auto s = exact_sqrt(-w.re)) return GaussianRational(Rational(0), *s);
        return std::nullopt;
    }
    // z = p + qi with z^2 = w: p^2 = (re + |w|)/2, q = im/(2p).
    auto n = exact_sqrt(w.norm());
    if (!n) return std::nullopt;
    auto p2 = (w.re + *n) / 2;
    auto p = exact_sqrt(p2);
    if (!p || p->is_zero()) return std::nullopt;
    Rational q = w.im / (2 * *p);
    GaussianRational z(*p, q);
    if (z * z == w) return z;
    return std::nullopt;
}

std::size_t hash_gaussian(const GaussianRational& g) {
    std::size_t h = hash_rational(g.re);
    h ^= hash_rational(g.im) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace cartinc
