#pragma once

#include <string_view>
#include <vector>

#include "starlike/classes.hpp"
#include "starlike/series.hpp"

namespace starlike {

/// Circles |z| = r_i, each sampled at M equally spaced angles starting at 0.
struct RadialGrid {
    std::vector<double> radii{0.9, 0.99, 0.999};
    int angular_count = 4096;

    /// Throws std::invalid_argument when radii are not strictly ascending in (0,1)
    /// or M < 1.
    void validate() const;
    double max_radius() const { return radii.back(); }
};

enum class EstimateKind { sup_abs_deviation, inf_real_part, sup_schwarz_ratio };

std::string_view to_string(EstimateKind kind);

/// An extremum of a sampled quantity; `value` is the quantity at `witness`,
/// which lies on the circle of radius `radius`.
struct BoundEstimate {
    double value = 0.0;
    complex witness{};
    double radius = 0.0;
    EstimateKind kind = EstimateKind::sup_abs_deviation;
};

/// Per-radius extrema plus the overall extremum.
///
/// `monotone` is false when the radius ladder contradicts the maximum (or
/// minimum) principle, which for truncated series signals that the truncation
/// order is too low for the outer radii.
struct LadderEstimate {
    std::vector<BoundEstimate> per_radius;
    BoundEstimate extremum;
    bool monotone = true;
    std::vector<double> skipped_radii;
};

inline constexpr double kBoundaryBand = 1e-9;
inline constexpr double kZeroOnCircleThreshold = 1e-9;

/// p(r e^{2 pi i j/M}) for j = 0..M-1. Computed with one length-M FFT of the
/// coefficients c_k r^k folded modulo M, which is exact for any truncation order.
std::vector<complex> eval_on_circle(const PowerSeries& p, double r, int M);

/// Same values by per-point Horner evaluation.
std::vector<complex> eval_on_circle_horner(const PowerSeries& p, double r, int M);

/// max |p(z) - 1| over the grid, refined by golden-section search around the
/// best sample. Requires p(0) = 1.
BoundEstimate sup_abs_deviation(const PowerSeries& p, const RadialGrid& grid);
LadderEstimate sup_abs_deviation_ladder(const PowerSeries& p, const RadialGrid& grid);

/// max over the grid of |p(z) - 1| / |z|^v.
///
/// When p - 1 vanishes to order v at the origin this ratio is nondecreasing in
/// |z| and tends to sup_{|z|<1} |p - 1|, so it is the sharpest grid-based lower
/// estimate of the disk supremum. v <= 0 selects the numerical valuation of p - 1.
LadderEstimate schwarz_ratio(const PowerSeries& p, const RadialGrid& grid, int valuation = 0);

struct DiskSubordination {
    bool holds = false;
    bool boundary = false;
    double margin = 0.0;  ///< |lambda| - estimated sup |p - 1| over the disk
    LadderEstimate estimate;
};

/// Tests p < 1 + lambda z, i.e. p(0) = 1 and |p - 1| <= |lambda| on the disk.
/// The disk supremum is estimated by `schwarz_ratio`; |margin| <= band is
/// reported as boundary (and counts as holding).
DiskSubordination subordinate_to_disk(const PowerSeries& p, complex lambda, const RadialGrid& grid,
                                      int valuation = 0, double band = kBoundaryBand);

/// inf Re(z f'(z)/f(z)) over the grid. Radii where |f| < zero_threshold at
/// some sample are skipped; throws ZeroOnCircle when every radius is skipped.
BoundEstimate starlikeness_order(const AnMember& f, const RadialGrid& grid,
                                 double zero_threshold = kZeroOnCircleThreshold);
LadderEstimate starlikeness_order_ladder(const AnMember& f, const RadialGrid& grid,
                                         double zero_threshold = kZeroOnCircleThreshold);

/// inf Re p(z) over the grid (no normalisation of p required).
LadderEstimate inf_real_part(const PowerSeries& p, const RadialGrid& grid);

/// max |arg p(z)| over the grid, principal branch.
LadderEstimate sup_abs_arg(const PowerSeries& p, const RadialGrid& grid);

/// z0 w'(z0)/w(z0) at the maximum of |w| on |z| = r.
///
/// Coarse scan over `coarse` angles, then 60 golden-section iterations. For a
/// single monomial c z^m the exact integer m is returned.
complex jack_lemma_witness(const PowerSeries& w, int n, double r, int coarse = 4096);

} // namespace starlike
