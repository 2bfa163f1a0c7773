#include "cartinc/rational.hpp"

#include <sstream>

namespace cartinc {

std::optional<Integer> exact_isqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

Integer iroot_floor(const Integer& n, unsigned k) {
    if (n < 0) fail(Err::InvalidArgument, "iroot_floor of negative value");
    if (k == 0) fail(Err::InvalidArgument, "zeroth root");
    if (n == 0 || n == 1 || k == 1) return n;
    if (k == 2) return boost::multiprecision::sqrt(n);
    // Binary search on r with r^k <= n.
    Integer lo = 1, hi = 2;
    while (boost::multiprecision::pow(hi, k) <= n) hi <<= 1;
    while (hi - lo > 1) {
        Integer mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::optional<Integer> exact_iroot(const Integer& n, unsigned k) {
    if (k == 0) fail(Err::InvalidArgument, "zeroth root");
    if (n < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_iroot(-n, k);
        if (r) return Integer(-*r);
        return std::nullopt;
    }
    Integer r = iroot_floor(n, k);
    if (boost::multiprecision::pow(r, k) == n) return r;
    return std::nullopt;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    // Canonical form: num/den coprime, so both must be perfect squares.
    auto n = exact_isqrt(numer(r));
    if (!n) return std::nullopt;
    auto d = exact_isqrt(denom(r));
    if (!d) return std::nullopt;
    return make_rational(*n, *d);
}

std::string rational_string(const Rational& r) {
    std::ostringstream os;
    os << numer(r);
    if (denom(r) != 1) os << '/' << denom(r);
    return os.str();
}

std::string decimal_string(const Rational& r, int sig) {
    if (sig < 1) sig = 1;
    if (r.is_zero()) return "0";
    const bool neg = r < 0;
    const Rational a = rat_abs(r);

    // e = floor(log10(a)): largest e with 10^e <= a.
    long long e = 0;
    const Integer ten = 10;
    Integer p = 1;
    if (a >= 1) {
        while (Rational(p * ten) <= a) {
            p *= ten;
            ++e;
        }
    } else {
        Rational x = a;
        while (x < 1) {
            x *= ten;
            --e;
        }
    }

    // mantissa = trunc(a * 10^(sig-1-e)) with exactly `sig` digits.
    const long long shift = sig - 1 - e;
    Rational scaled = a;
    if (shift >= 0)
        scaled *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(shift)));
    else
        scaled /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-shift)));
    Integer mant = numer(scaled) / denom(scaled);

    std::string digits = mant.str();
    std::string out;
    if (e >= 0 && e < 15) {
        if (static_cast<long long>(digits.size()) <= e) {
            out = digits + std::string(e + 1 - digits.size(), '0');
        } else {
            out = digits.substr(0, e + 1);
            std::string frac = digits.substr(e + 1);
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            if (!frac.empty()) out += "." + frac;
        }
    } else if (e < 0 && e > -7) {
        std::string frac(-e - 1, '0');
        frac += digits;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = "0." + frac;
    } else {
        out = digits.substr(0, 1);
        std::string frac = digits.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) fail(Err::InvalidArgument, "empty interval");
    if (lo < 0 && 0 < hi) return Rational(0);
    if (hi <= 0) return -simplest_rational_between(-hi, -lo);
    if (lo.is_zero()) {
        // Smallest denominator in (0, hi) is 1/m for the smallest valid m,
        // unless hi > 1 in which case 1 works.
        if (hi > 1) return Rational(1);
        Integer m = floor_div(denom(hi), numer(hi)) + 1;
        return make_rational(1, m);
    }
    Integer fl = rat_floor(lo);
    Rational lo_frac = lo - Rational(fl);
    Rational hi_shift = hi - Rational(fl);
    if (hi_shift > 1) return Rational(fl + 1);
    // Now 0 <= lo_frac < hi_shift <= 1; recurse on reciprocals.
    if (lo_frac.is_zero()) {
        Integer m = floor_div(denom(hi_shift), numer(hi_shift)) + 1;
        return Rational(fl) + make_rational(1, m);
    }
    Rational inner = simplest_rational_between(rat_inv(hi_shift), rat_inv(lo_frac));
    return Rational(fl) + rat_inv(inner);
}

std::size_t hash_rational(const Rational& r) { return std::hash<Rational>{}(r); }

const char* err_name(Err code) {
    switch (code) {
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::ParseError: return "ParseError";
        case Err::DegenerateInput: return "DegenerateInput";
        case Err::RootAtEndpoint: return "RootAtEndpoint";
        case Err::RTooLarge: return "RTooLarge";
        case Err::DegenerateLine: return "DegenerateLine";
        case Err::ComplexityGuard: return "ComplexityGuard";
        case Err::KTooSmall: return "KTooSmall";
        case Err::ZeroInA: return "ZeroInA";
        case Err::DegenerateSlope: return "DegenerateSlope";
        case Err::DuplicatePoint: return "DuplicatePoint";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::EmptyRange: return "EmptyRange";
        case Err::InvalidArgument: return "InvalidArgument";
        case Err::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace cartinc
