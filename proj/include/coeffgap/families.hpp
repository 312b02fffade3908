#pragma once

#include <vector>

#include "coeffgap/series.hpp"

namespace coeffgap {

/// Coefficients a1..aN of a normalized schlicht function, a1 = 1.
struct SchlichtCoefficients {
    std::vector<Complex> a;  // a[n-1] = a_n, a[0] = 1

    std::size_t count() const noexcept { return a.size(); }

    /// a_n for 1 <= n <= count().
    const Complex& at(std::size_t n) const { return a[n - 1]; }
};

/// Solves f' + z f'' = P f' termwise for the convex function driven by the
/// kernel P (p0 must be 1):
///   a_n = [sum_{k=1}^{n-1} k a_k p_{n-k}] / (n^2 - n),  a_1 = 1.
/// Low orders reduce to a2 = p1/2, a3 = (p1^2+p2)/6, a4 = (p1^3+3p1p2+2p3)/24.
SchlichtCoefficients convex_from_kernel(const TruncatedSeries& P, std::size_t order);

/// Solves z f'/f = P termwise for the starlike function driven by P:
///   a_n = [sum_{k=1}^{n-1} a_k p_{n-k}] / (n - 1),  a_1 = 1.
SchlichtCoefficients starlike_from_kernel(const TruncatedSeries& P, std::size_t order);

/// n-th coefficient of L_phi: sin(n phi)/(n sin phi), with the limit values
/// 1 (phi = 0 mod 2pi) and (-1)^{n+1} (phi = pi mod 2pi) below the 1e-9
/// sin cutoff.
double coeff_L(double phi, int n);

/// n-th coefficient of K_phi = z L_phi': sin(n phi)/sin(phi) with limits
/// n and n(-1)^{n+1}.
double coeff_K(double phi, int n);

/// Coefficients a1..aN of L_phi as a SchlichtCoefficients value.
SchlichtCoefficients l_coefficients(double phi, std::size_t order);

/// L_phi as a germ (0, 1, a2, ...) for series-level operations.
TruncatedSeries l_series(double phi, std::size_t order);

/// K_phi as a germ (0, 1, a2, ...).
TruncatedSeries k_series(double phi, std::size_t order);

}  // namespace coeffgap
