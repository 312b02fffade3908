#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coeffgap/caratheodory.hpp"
#include "coeffgap/functionals.hpp"

namespace coeffgap {

/// Result of a maximization run. `value` always re-evaluates from `argument`
/// through the public pipeline within 1e-12. Searches that only certify a
/// lower bound (Herglotz sampling, n >= 4 estimates) set lower_bound_only.
struct OptimumReport {
    double value = 0.0;
    std::vector<std::pair<std::string, double>> argument;
    std::int64_t grid_points_evaluated = 0;
    int refinement_levels = 0;
    bool lower_bound_only = false;
    std::optional<std::pair<double, double>> bracket;  // analytic (lo, hi) when known
    std::string method;

    /// Argument component by name; throws if absent.
    double arg(const std::string& name) const;
};

/// Uniform grid of `grid` intervals over [lo, hi], then `refinements` rounds
/// re-gridding around the incumbent with the window shrunk 10x (clamped to
/// [lo, hi]). Exact value ties keep the smaller argument. A non-finite
/// objective value raises Error::evaluation carrying the grid point.
OptimumReport maximize_1d(const std::function<double(double)>& f, double lo, double hi,
                          int grid, int refinements);

/// Grid sizes for the LZ-chart maximizers. For n = 2 only (r, theta) are
/// used; the 4-D n = 3 sweep defaults to a coarser base grid since the
/// refinement rounds recover the resolution at a fraction of the cost.
struct ChartGrid {
    int r_points;
    int theta_points;
    int s_points;
    int tau_points;

    static ChartGrid defaults_for(int n) {
        return n <= 2 ? ChartGrid{101, 256, 1, 1} : ChartGrid{21, 64, 21, 64};
    }
};

/// Maximizes the gap over K(p) through the LZ chart: x = r e^{i theta}
/// (and y = s e^{i tau} when kind.n = 3) with r, s in [0, 1] and theta, tau
/// in [0, 2pi). Every grid point runs lz_expand -> convex_from_kernel ->
/// gap (the hot path evaluates the same composition in closed form).
OptimumReport maximize_gap_kp(const GapKind& kind, double p, const ChartGrid& grid,
                              int refinements, int threads = 0);

OptimumReport maximize_gap_kp(const GapKind& kind, double p);

/// Outer sweep over p in [0, 2] (p_grid intervals, refined around the best
/// p) composed with maximize_gap_kp.
OptimumReport maximize_gap_sweep(const GapKind& kind, int p_grid, const ChartGrid& inner,
                                 int refinements);

OptimumReport maximize_gap_sweep(const GapKind& kind);

/// Randomized lower-bound search over Herglotz extreme points: seeded random
/// measures refined by coordinatewise hill-climbing on (gamma, phi) with
/// simplex re-projection of the weights. Deterministic given the seed and
/// independent of scheduling.
OptimumReport maximize_gap_herglotz(const GapKind& kind, int atoms, int restarts,
                                    int local_steps, std::uint64_t seed);

/// Best known lower bound for V_n: the Psi_n scan (over the half-period
/// [0, pi/2]; Psi_n is even about pi/2) merged with the Herglotz search.
/// For n >= 4 the report is lower-bound-only and carries the analytic
/// bracket (1/n, 2/(n+1)).
OptimumReport estimate_vn(int n, int scan_grid, int atoms, int restarts, std::uint64_t seed);

/// Gap objective of the function generated by a measure; shared by the
/// Herglotz search and its tests.
double herglotz_gap_objective(const GapKind& kind, const HerglotzMeasure& m);

}  // namespace coeffgap
