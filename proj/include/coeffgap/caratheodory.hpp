#pragma once

#include <vector>

#include "coeffgap/rng.hpp"
#include "coeffgap/series.hpp"

namespace coeffgap {

/// Finite convex combination of boundary atoms: P(z) = sum_j gamma_j
/// (1 + e^{i phi_j} z)/(1 - e^{i phi_j} z). These are the extreme points of
/// the Caratheodory class.
struct HerglotzMeasure {
    struct Atom {
        double gamma;  // weight, >= 0
        double phi;    // angle in (-pi, pi]
    };
    std::vector<Atom> atoms;

    /// Throws Error::measure unless weights are nonnegative, sum to 1 within
    /// 1e-12, and angles are pairwise distinct.
    void validate() const;
};

/// Coefficient prefix p1..pn of a formal Caratheodory candidate.
struct CaratheodoryPrefix {
    std::vector<Complex> p;  // p[k-1] = p_k

    std::size_t length() const noexcept { return p.size(); }
};

/// The Libera-Zlotkiewicz chart for (p1, p2, p3): p1 = p real, and disk
/// parameters x, y. When |x| = 1 the y coordinate is immaterial and
/// degenerate_y is set.
struct LZParams {
    double p = 0.0;
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};
    bool degenerate_y = false;
};

/// Series 1 + sum 2 sum_j gamma_j e^{i n phi_j} z^n up to the given order.
TruncatedSeries herglotz_coefficients(const HerglotzMeasure& m, std::size_t order);

/// Determinant of the (n+1)x(n+1) Hermitian Toeplitz matrix with diagonal 2
/// and first row (2, p1, ..., pn). The imaginary residue of the complex LU
/// determinant is discarded (it is below 1e-9 for these sizes).
double toeplitz_determinant(const CaratheodoryPrefix& prefix, std::size_t n);

/// True iff D_k >= -tol * 2^{k+1} for every 1 <= k <= length. The scale
/// 2^{k+1} is the zero-prefix determinant, so the tolerance is relative to
/// the determinant magnitude at that size.
bool is_caratheodory_prefix(const CaratheodoryPrefix& prefix, double tol);

/// (p1, p2, p3) from the chart:
///   p1 = p
///   2 p2 = p^2 + x (4 - p^2)
///   4 p3 = p^3 + 2(4-p^2) p x - p (4-p^2) x^2 + 2 (4-p^2)(1-|x|^2) y
CaratheodoryPrefix lz_expand(const LZParams& params);

/// Inverts lz_expand on a feasible length-3 prefix with real p1 in (-2, 2).
/// |p1| = 2 is chart-degenerate; an infeasible prefix is a feasibility error.
/// When |x| snaps to the unit circle the result has degenerate_y set, y = 0.
LZParams lz_recover(const CaratheodoryPrefix& prefix);

/// The rank-two extremal kernel (1 - z^2)/(1 - p1 z + z^2): coefficients
/// p_n = 2 cos(n arccos(p1/2)). Equals herglotz_coefficients on the atom
/// pair {(1/2, phi), (1/2, -phi)}.
TruncatedSeries d2_extremal_kernel(double p1, std::size_t order);

/// Random measure: atom count uniform in {1..max_atoms}, angles uniform in
/// (-pi, pi], weights a uniform simplex sample.
HerglotzMeasure sample_measure(RngStream& rng, int max_atoms = 6);

/// Prefix (p1..pn) extracted from a kernel series 1 + sum p_n z^n.
CaratheodoryPrefix prefix_from_series(const TruncatedSeries& P, std::size_t n);

}  // namespace coeffgap
