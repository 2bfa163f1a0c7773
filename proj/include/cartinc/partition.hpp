#pragma once

#include <string>
#include <vector>

#include "cartinc/incidence.hpp"
#include "cartinc/lines.hpp"

namespace cartinc {

// Real-only machinery: balanced interval cuts on the factor sets, exact
// gridline-crossing counts via Sturm, and the I1/I2 incidence decomposition.

struct SelectedR {
    int r = 1;
    bool lower_clamped = false;  // raw value fell below d
    bool upper_clamped = false;  // raw value exceeded |A|
};

/// r = clamp(ceil(((M*nP^2)/(d*nC))^(1/3)), d, nA), by exact integer
/// bracketing: the returned r is the least integer with r^3*d*nC >= M*nP^2,
/// before clamping. The flags report which clamp bound was active.
SelectedR select_r(long long d, long long m_rich, long long n_points, long long n_curves,
                   long long n_a);

/// Cuts splitting sorted A into at most r blocks of size <= ceil(|A|/r);
/// cuts are midpoints between neighboring elements, so they never hit A and
/// have wiggle room. Throws RTooLarge for r > |A|.
std::vector<Rational> choose_cuts(const std::vector<Rational>& sorted_a, int r);

struct GridPartition {
    std::vector<Rational> cuts_x;  // sorted, disjoint from A
    std::vector<Rational> cuts_y;  // sorted, disjoint from B
    int r = 1;

    /// Index of the open interval containing v (cuts never equal values).
    static int cell_of(const std::vector<Rational>& cuts, const Rational& v) {
        return static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
    }
};

GridPartition make_grid(const CartesianPointSet<Rational>& pts, int r);

struct CrossingCount {
    std::string curve_label;
    char axis;  // 'x' for a vertical cut line x = value, 'y' for horizontal
    int cut_index;
    Rational cut_value;
    int count;
};

/// For every curve and grid line, the exact number of crossings (distinct
/// real intersection points), via Sturm counts on the fiber polynomial.
/// Throws DegenerateLine when a cut line lies inside a curve.
std::vector<CrossingCount> gridline_crossings(const CurveFamily<Rational>& fam,
                                              const GridPartition& grid);

struct DecompositionReport {
    long long i1 = 0;            // incidences alone in their (curve, cell)
    long long i2 = 0;            // incidences sharing a (curve, cell)
    long long total = 0;         // |I(P, C)| = i1 + i2
    long long per_cell_max = 0;  // largest (curve, cell) group
    int crossings_per_line_max = 0;  // filled by the pipeline when computed
};

struct CellCount {
    int cell_x;
    int cell_y;
    std::string curve_label;
    long long count;
};

/// Assigns every incidence to its grid cell and splits I into I1 (curve has
/// exactly one incidence in the cell) and I2 (two or more).
DecompositionReport decompose_incidences(const IncidenceGraph& graph,
                                         const CartesianPointSet<Rational>& pts,
                                         const GridPartition& grid,
                                         std::vector<CellCount>* cells = nullptr);

}  // namespace cartinc
