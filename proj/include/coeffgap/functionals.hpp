#pragma once

#include "coeffgap/families.hpp"
#include "coeffgap/kernels.hpp"

namespace coeffgap {

/// Which successive-coefficient gap to take at index n (n >= 2):
///   up:   |a_{n+1}| - |a_n|
///   down: |a_n| - |a_{n+1}|
///   diff: |a_{n+1} - a_n|
struct GapKind {
    kernels::GapOp op;
    int n;
};

double gap(const SchlichtCoefficients& f, const GapKind& kind);

/// Closed form of max over the closed disk of |a + b z + c z^2| + 1 - |z|^2
/// for a, c >= 0: a + |b| + c when |b| >= 2(1-c), else 1 + a + b^2/(4(1-c))
/// (the quotient read as 0 when |b| = 2(1-c) = 0).
double y_closed(double a, double b, double c);

/// The defining maximization on a polar grid (radial points over [0, 1]
/// including both endpoints, angular points over [0, 2pi)); the independent
/// oracle for y_closed. Grid sizes must be >= 64.
double y_bruteforce(double a, double b, double c, int radial, int angular);

/// Sharp bound for |a4 - a3| on the p-slice: (p^3+50p^2-64p+64)/192 for
/// p < 8/7, (2-p)(3p^2+2p-2)/12 for p >= 8/7; continuous at 8/7 (= 103/343).
double psi_bound(double p);

/// Sharp bound for |a3 - a2| on the p-slice: (2p+1)(2-p)/6.
double a3_a2_bound(double p);

/// |a_n(L_phi)| - |a_{n+1}(L_phi)| in closed form; n >= 2.
double psi_n(int n, double phi);

/// (n+1)|a_{n+1}| - n|a_n|; lies in [-1, 1] for starlike-generated input.
double theorem_a_gap(const SchlichtCoefficients& f, int n);

/// (a_{n+1}(L_phi) - a_n(L_phi)) / (a_2(L_phi) - 1); tends to (2n+1)/3 as
/// phi -> 0. Error when |a_2(L_phi) - 1| < 1e-12 (the 0/0 limit point).
double robertson_ratio(double phi, int n);

/// F(-|z|) - F(z) for F(z) = |u + 2z| - |a + bz - cz^2| with
/// u = 6p^2/(4-p^2), a = 3p^3/(4-p^2), b = 5p/2, c = p/2; nonnegative on the
/// closed disk for 4/3 <= p <= sqrt(2).
double lemma_f_margin(double p, Complex z);

/// 1 - x - cos(pi x).
double h_poly(double x);

struct HaymanConstants {
    double lambda0;  // root of 4 t e^{-t} = 1 in (0, 1)
    double s_bound;  // 3/4 + e^{-lambda0}(2 e^{-lambda0} - 1)
};

/// Bisection to 1e-12 on the defining equation.
HaymanConstants hayman_constants();

}  // namespace coeffgap
