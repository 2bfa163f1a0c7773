#include "cartinc/bounds.hpp"

#include <sstream>

namespace cartinc {

namespace {

Integer ipow(long long base, unsigned exp) {
    return boost::multiprecision::pow(Integer(base), exp);
}

int decimal_digits(const Integer& n) {
    return static_cast<int>(n.str().size());
}

void require_positive(std::initializer_list<std::pair<const char*, long long>> args) {
    for (const auto& [name, v] : args)
        if (v < 1)
            fail(Err::InvalidArgument, std::string(name) + " must be >= 1, got " +
                                           std::to_string(v));
}

BoundTerm product_term(std::string name, const PowerValue& root, const Rational& factor) {
    return {std::move(name), root.value * factor, root.exact};
}

void finish(BoundReport& rep, std::optional<long long> observed) {
    const Rational* best = nullptr;
    for (const auto& t : rep.terms)
        if (!best || t.value > *best) {
            best = &t.value;
            rep.dominant = t.name;
        }
    if (observed) {
        rep.observed = observed;
        rep.ratio = round_sig(Rational(*observed) / rep.total());
    }
}

}  // namespace

PowerValue integer_root_value(const Integer& base, unsigned k) {
    if (base < 0) fail(Err::InvalidArgument, "negative radicand");
    if (k == 0) fail(Err::InvalidArgument, "zeroth root");
    Integer floor_root = iroot_floor(base, k);
    if (boost::multiprecision::pow(floor_root, k) == base)
        return {Rational(floor_root), true};
    int extra = std::max(0, 7 - decimal_digits(floor_root));
    Integer scaled = base * ipow(10, static_cast<unsigned>(extra) * k);
    Integer mant = iroot_floor(scaled, k);
    return {make_rational(mant, ipow(10, extra)), false};
}

PowerValue log2_value(long long n) {
    if (n < 1) fail(Err::InvalidArgument, "log2 of a nonpositive value");
    Integer v(n);
    int msb = 0;
    while ((Integer(1) << (msb + 1)) <= v) ++msb;
    if ((Integer(1) << msb) == v) return {Rational(msb), true};

    // Fixed-point mantissa in [1, 2) scaled by 10^30; repeated squaring
    // extracts fractional bits, floor division keeps the estimate directed.
    const Integer scale = ipow(10, 30);
    Integer mant = (v * scale) >> msb;
    Integer frac_num = 0;
    const int frac_bits = 21;
    for (int i = 0; i < frac_bits; ++i) {
        mant = (mant * mant) / scale;
        frac_num <<= 1;
        if (mant >= 2 * scale) {
            mant >>= 1;
            frac_num += 1;
        }
    }
    return {Rational(msb) + make_rational(frac_num, Integer(1) << frac_bits), false};
}

Rational round_sig(const Rational& r, int sig) {
    if (r.is_zero()) return r;
    bool neg = r < 0;
    Rational a = rat_abs(r);
    long long e = 0;
    Rational p(1);
    if (a >= 1) {
        while (p * 10 <= a) {
            p *= 10;
            ++e;
        }
    } else {
        Rational x = a;
        while (x < 1) {
            x *= 10;
            --e;
        }
    }
    long long shift = sig - 1 - e;
    Rational scaled = a;
    Integer ten_shift = ipow(10, static_cast<unsigned>(shift >= 0 ? shift : -shift));
    if (shift >= 0)
        scaled *= Rational(ten_shift);
    else
        scaled /= Rational(ten_shift);
    Integer mant = numer(scaled) / denom(scaled);
    Rational out = shift >= 0 ? make_rational(mant, ten_shift) : Rational(mant * ten_shift);
    return neg ? -out : out;
}

BoundReport bound_main(long long d, long long m_rich, long long n_points, long long n_curves,
                       std::optional<long long> observed) {
    require_positive({{"d", d}, {"M", m_rich}, {"nP", n_points}, {"nC", n_curves}});
    BoundReport rep;
    rep.formula = "main";
    rep.params = {{"d", d}, {"M", m_rich}, {"nP", n_points}, {"nC", n_curves}};

    Integer cube = ipow(d, 4) * Integer(m_rich) * ipow(n_points, 2) * ipow(n_curves, 2);
    rep.terms.push_back(product_term("d^(4/3) M^(1/3) P^(2/3) C^(2/3)",
                                     integer_root_value(cube, 3), Rational(1)));

    PowerValue lm = log2_value(m_rich);
    PowerValue ld = log2_value(d);
    Rational log_sum = lm.value + ld.value + 1;
    rep.terms.push_back({"M (log2 M + log2 d + 1) P",
                         Rational(m_rich) * log_sum * Rational(n_points),
                         lm.exact && ld.exact});

    rep.terms.push_back({"d^4 C", Rational(ipow(d, 4) * Integer(n_curves)), true});
    finish(rep, observed);
    return rep;
}

BoundReport bound_real(long long d, long long m_rich, long long n_points, long long n_curves,
                       std::optional<long long> observed) {
    require_positive({{"d", d}, {"M", m_rich}, {"nP", n_points}, {"nC", n_curves}});
    BoundReport rep;
    rep.formula = "real";
    rep.params = {{"d", d}, {"M", m_rich}, {"nP", n_points}, {"nC", n_curves}};

    Integer cube = ipow(d, 2) * Integer(m_rich) * ipow(n_points, 2) * ipow(n_curves, 2);
    rep.terms.push_back(product_term("d^(2/3) M^(1/3) P^(2/3) C^(2/3)",
                                     integer_root_value(cube, 3), Rational(1)));

    PowerValue lm = log2_value(m_rich);
    PowerValue ld = log2_value(d);
    Rational log_sum = lm.value + ld.value + 1;
    rep.terms.push_back({"M (log2 M + log2 d + 1) P",
                         Rational(m_rich) * log_sum * Rational(n_points),
                         lm.exact && ld.exact});

    rep.terms.push_back({"d^2 C", Rational(ipow(d, 2) * Integer(n_curves)), true});
    finish(rep, observed);
    return rep;
}

BoundReport bound_kst(long long s, long long t, long long n_x, long long n_y,
                      std::optional<long long> observed) {
    require_positive({{"s", s}, {"t", t}, {"nX", n_x}, {"nY", n_y}});
    BoundReport rep;
    rep.formula = "kst";
    rep.params = {{"s", s}, {"t", t}, {"nX", n_x}, {"nY", n_y}};

    // t^(1/s) X Y^(1-1/s) = (t Y^(s-1))^(1/s) X
    Integer radicand = Integer(t) * ipow(n_y, static_cast<unsigned>(s - 1));
    rep.terms.push_back(product_term("t^(1/s) X Y^(1-1/s)",
                                     integer_root_value(radicand, static_cast<unsigned>(s)),
                                     Rational(n_x)));
    rep.terms.push_back({"s Y", Rational(s) * Rational(n_y), true});
    finish(rep, observed);
    return rep;
}

BoundReport bound_general_st(long long s, long long n_points, long long n_curves,
                             std::optional<long long> observed) {
    if (s < 2) fail(Err::InvalidArgument, "general form needs s >= 2");
    require_positive({{"nP", n_points}, {"nC", n_curves}});
    BoundReport rep;
    rep.formula = "general";
    rep.params = {{"s", s}, {"nP", n_points}, {"nC", n_curves}};
    rep.note = "constant factors depending on d, s, t are not shown";

    Integer radicand =
        ipow(n_points, static_cast<unsigned>(s)) * ipow(n_curves, static_cast<unsigned>(2 * s - 2));
    rep.terms.push_back(product_term(
        "P^(s/(2s-1)) C^((2s-2)/(2s-1))",
        integer_root_value(radicand, static_cast<unsigned>(2 * s - 1)), Rational(1)));
    rep.terms.push_back({"P", Rational(n_points), true});
    rep.terms.push_back({"C", Rational(n_curves), true});
    finish(rep, observed);
    return rep;
}

std::string TrendTable::csv() const {
    std::string out = "n,observed,bound_total,ratio\n";
    for (const auto& r : rows) out += r + "\n";
    out += "max,,," + decimal_string(max_ratio) + "\n";
    out += "min,,," + decimal_string(min_ratio) + "\n";
    return out;
}

TrendTable trend_table(const std::vector<TrendRow>& rows) {
    if (rows.empty()) fail(Err::EmptyRange, "trend table needs at least one row");
    TrendTable table;
    bool first = true;
    for (const auto& row : rows) {
        Rational total = row.bound.total();
        Rational ratio = round_sig(Rational(row.observed) / total);
        std::ostringstream os;
        os << row.n << "," << row.observed << "," << decimal_string(total) << ","
           << decimal_string(ratio);
        table.rows.push_back(os.str());
        if (first || ratio > table.max_ratio) table.max_ratio = ratio;
        if (first || ratio < table.min_ratio) table.min_ratio = ratio;
        first = false;
    }
    return table;
}

}  // namespace cartinc
