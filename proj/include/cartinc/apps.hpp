#pragma once

#include <optional>

#include "cartinc/bounds.hpp"
#include "cartinc/incidence.hpp"

namespace cartinc {

/// Inversion map z -> a / (z + b), a != 0. richness = |phi(A) cap A|,
/// computed excluding the pole z = -b.
struct InversionMap {
    GaussianRational a;
    GaussianRational b;
    int richness = 0;
};

/// Exactly R_k(A): every map realizing at least k values of A on A.
/// Candidates are generated from ordered pairs of mapping pairs (x -> y),
/// (x' -> y') via b = (y'x' - yx)/(y - y'), a = y(x + b); complete for k >= 2
/// because an inversion is injective, so a k-rich map realizes two mapping
/// pairs with distinct images. Deduplicated and sorted by (a, b).
std::vector<InversionMap> rich_inversions(std::vector<GaussianRational> A, int k);

/// The curve family C_ab = Z(y(x+b) - a) attached to a set of maps, with
/// labels in map order.
CurveFamily<GaussianRational> inversion_curves(const std::vector<InversionMap>& maps);

struct InversionReport {
    long long n = 0;
    int k = 0;
    long long map_count = 0;
    long long incidence_total = 0;
    bool richness_pass = false;  // every map re-verified >= k on the graph
    bool kst_pass = false;       // no K_{2,3} among the C_ab
    Rational ratio_k3_n4{0};     // |R_k| k^3 / n^4
};

/// Runs rich_inversions plus the incidence cross-checks on P = A x A.
InversionReport inversion_app(std::vector<GaussianRational> A, int k,
                              long long cap = 100'000'000);

struct ExpansionReport {
    long long n = 0;
    long long size_sum = 0;      // |A + A|
    long long size_inv_sum = 0;  // |1/A + 1/A|
    long long size_mixed = 0;    // |A + 1/A|
    long long curves_checked = 0;
    long long incidence_total = 0;
    bool richness_pass = false;  // every C_ab has >= |A| incidences
    bool kst_pass = false;       // no K_{2,3}
    Rational ratio_mixed_n54{0};    // |A + 1/A| / n^(5/4)
    Rational ratio_product_n52{0};  // |A+A| |1/A+1/A| / n^(5/2)
};

/// Sum sets of A and 1/A, with the curves C_ab = Z((x-a)(y-1/b) - 1) built on
/// P = (A+A) x (1/A+1/A); verifies the per-curve richness witnesses
/// (a + a', 1/a' + 1/b), the n^3 incidence floor and K_{2,3}-freeness.
ExpansionReport sumset_expander(std::vector<GaussianRational> A, long long cap = 100'000'000);

template <typename K>
struct DistanceReport {
    long long n = 0;
    K slope{};
    long long distance_count = 0;  // |D(A, B)|
    long long energy = 0;          // quadruple energy of f on A x B
    Rational energy_floor{0};      // n^4 / |D|, exact
    bool kst_pass = false;         // no K_{2,3} among the hyperbolas
    Rational ratio_n43{0};         // |D| / n^(4/3)
};

/// Distances f(x, y) = (x - y)^2 + m^2 y^2 between points on two lines with
/// slope parameter m != 0 (and 1 + m^2 != 0 in the complex case). Builds the
/// hyperbola family C_{bb'} = Z(f(x,b) - f(y,b')) for b != b' on A x A and
/// checks the Cauchy-Schwarz energy floor exactly.
template <typename K>
DistanceReport<K> line_distance_set(std::vector<K> A, std::vector<K> B, const K& m,
                                    long long cap = 100'000'000);

extern template DistanceReport<Rational> line_distance_set<Rational>(std::vector<Rational>,
                                                                     std::vector<Rational>,
                                                                     const Rational&, long long);
extern template DistanceReport<GaussianRational> line_distance_set<GaussianRational>(
    std::vector<GaussianRational>, std::vector<GaussianRational>, const GaussianRational&,
    long long);

}  // namespace cartinc
