#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartinc/rational.hpp"

namespace cartinc {

/// One evaluated bound term. `exact` distinguishes closed-form integer or
/// rational values from floor-rounded 6-significant-digit approximations.
struct BoundTerm {
    std::string name;
    Rational value;
    bool exact = true;
};

struct BoundReport {
    std::string formula;
    std::vector<std::pair<std::string, long long>> params;
    std::vector<BoundTerm> terms;
    std::string dominant;  // name of the maximal term, ties to the earlier one
    std::optional<long long> observed;
    std::optional<Rational> ratio;  // observed / sum(terms), 6 significant digits
    std::string note;

    Rational total() const {
        Rational t(0);
        for (const auto& term : terms) t += term.value;
        return t;
    }
};

struct PowerValue {
    Rational value;
    bool exact = true;
};

/// base^(1/k): exact when base is a perfect k-th power, otherwise the largest
/// 7-significant-digit decimal not exceeding the true root (floor-directed).
PowerValue integer_root_value(const Integer& base, unsigned k);

/// log2(n) for n >= 1: exact for powers of two, otherwise floor-directed with
/// 21 fractional bits, computed by integer mantissa squaring.
PowerValue log2_value(long long n);

/// Rounds toward zero to 6 significant digits.
Rational round_sig(const Rational& r, int sig = 6);

/// All O-constants are 1; the log term is log2(M) + log2(d) + 1 so it stays
/// >= 1. Terms: d^(4/3) M^(1/3) P^(2/3) C^(2/3);  M (log2 M + log2 d + 1) P;
/// d^4 C.
BoundReport bound_main(long long d, long long m_rich, long long n_points, long long n_curves,
                       std::optional<long long> observed = std::nullopt);

/// Real-case variant: d^(2/3) on the first term and d^2 on the last.
BoundReport bound_real(long long d, long long m_rich, long long n_points, long long n_curves,
                       std::optional<long long> observed = std::nullopt);

/// Bipartite edge bound: t^(1/s) X Y^(1-1/s) + s Y.
BoundReport bound_kst(long long s, long long t, long long n_x, long long n_y,
                      std::optional<long long> observed = std::nullopt);

/// s-point variant: P^(s/(2s-1)) C^((2s-2)/(2s-1)) + P + C, for s >= 2.
BoundReport bound_general_st(long long s, long long n_points, long long n_curves,
                             std::optional<long long> observed = std::nullopt);

struct TrendRow {
    long long n;
    long long observed;
    BoundReport bound;
};

struct TrendTable {
    std::vector<std::string> rows;  // csv data rows
    Rational max_ratio{0};
    Rational min_ratio{0};
    std::string csv() const;
};

/// Per-row observed/bound ratios plus the extremes over the series.
TrendTable trend_table(const std::vector<TrendRow>& rows);

}  // namespace cartinc
