#include <cmath>

#include "coeffgap/kernels.hpp"

// Reference kernels. The SIMD variants must reproduce these bit for bit
// (equivalence-tested), so every per-point expression here is mirrored in
// avx2.cpp with the same operation order and no FMA contraction.

namespace coeffgap::kernels {

namespace {

BestPoint disk_grid_max_scalar(double a, double b, double c, const PolarGrid& g,
                               std::int64_t row_begin, std::int64_t row_end) {
    BestPoint best;
    for (std::int64_t ir = row_begin; ir < row_end; ++ir) {
        const double r = g.r[ir];
        const double br = b * r;
        const double cr2 = c * (r * r);
        const double base = 1.0 - r * r;
        const std::int64_t row = ir * g.nth;
        for (std::int64_t j = 0; j < g.nth; ++j) {
            const double re = a + br * g.cos1[j] + cr2 * g.cos2[j];
            const double im = br * g.sin1[j] + cr2 * g.sin2[j];
            const double v = std::sqrt(re * re + im * im) + base;
            if (v > best.value) {
                best.value = v;
                best.index = row + j;
            }
        }
    }
    return best;
}

// a2 = p/2, a3 = (p^2 + p2)/6 with 2 p2 = p^2 + x(4 - p^2).
BestPoint gap2_grid_max_scalar(GapOp op, double p, const PolarGrid& x,
                               std::int64_t row_begin, std::int64_t row_end) {
    BestPoint best;
    const double q = 4.0 - p * p;
    const double p2 = p * p;
    const double a2 = std::fabs(0.5 * p);
    for (std::int64_t ir = row_begin; ir < row_end; ++ir) {
        const double r = x.r[ir];
        const std::int64_t row = ir * x.nth;
        for (std::int64_t j = 0; j < x.nth; ++j) {
            const double xr = r * x.cos1[j];
            const double xi = r * x.sin1[j];
            const double p2r = 0.5 * (p2 + q * xr);
            const double p2i = 0.5 * (q * xi);
            const double a3r = (p2 + p2r) / 6.0;
            const double a3i = p2i / 6.0;
            double v;
            if (op == GapOp::diff) {
                const double dr = a3r - 0.5 * p;
                v = std::sqrt(dr * dr + a3i * a3i);
            } else {
                const double m3 = std::sqrt(a3r * a3r + a3i * a3i);
                v = (op == GapOp::down) ? a2 - m3 : m3 - a2;
            }
            if (v > best.value) {
                best.value = v;
                best.index = row + j;
            }
        }
    }
    return best;
}

// a3 as above; a4 = (p^3 + 3 p p2 + 2 p3)/24 with
// 4 p3 = p^3 + 2(4-p^2) p x - p (4-p^2) x^2 + 2 (4-p^2)(1-|x|^2) y.
// For fixed x the y dependence is affine: a4 = A + (k4/48) y.
BestPoint gap3_grid_max_scalar(GapOp op, double p, const PolarGrid& x, const PolarGrid& y,
                               std::int64_t outer_begin, std::int64_t outer_end) {
    BestPoint best;
    const double q = 4.0 - p * p;
    const double p2 = p * p;
    const double p3 = p2 * p;
    const double tqp = 2.0 * q * p;
    const double pq = p * q;
    const std::int64_t inner = y.nr * y.nth;
    for (std::int64_t o = outer_begin; o < outer_end; ++o) {
        const std::int64_t ir = o / x.nth;
        const std::int64_t j = o % x.nth;
        const double r = x.r[ir];
        const double xr = r * x.cos1[j];
        const double xi = r * x.sin1[j];
        const double x2r = xr * xr - xi * xi;
        const double x2i = 2.0 * (xr * xi);
        const double nrm = xr * xr + xi * xi;
        const double p2r = 0.5 * (p2 + q * xr);
        const double p2i = 0.5 * (q * xi);
        const double a3r = (p2 + p2r) / 6.0;
        const double a3i = p2i / 6.0;
        const double m3 = std::sqrt(a3r * a3r + a3i * a3i);
        // y-free part of 4 p3
        const double cr = p3 + tqp * xr - pq * x2r;
        const double ci = tqp * xi - pq * x2i;
        // a4 = (Ar, Ai) + yc * y
        const double ar = (p3 + 3.0 * p * p2r + 0.5 * cr) / 24.0;
        const double ai = (3.0 * p * p2i + 0.5 * ci) / 24.0;
        const double yc = 2.0 * q * (1.0 - nrm) / 48.0;
        const double br0 = (op == GapOp::diff) ? ar - a3r : ar;
        const double bi0 = (op == GapOp::diff) ? ai - a3i : ai;
        const std::int64_t plane = o * inner;
        for (std::int64_t is = 0; is < y.nr; ++is) {
            const double w = yc * y.r[is];
            const std::int64_t row = plane + is * y.nth;
            for (std::int64_t k = 0; k < y.nth; ++k) {
                const double ur = br0 + w * y.cos1[k];
                const double ui = bi0 + w * y.sin1[k];
                const double m = std::sqrt(ur * ur + ui * ui);
                double v;
                if (op == GapOp::diff) {
                    v = m;
                } else if (op == GapOp::down) {
                    v = m3 - m;
                } else {
                    v = m - m3;
                }
                if (v > best.value) {
                    best.value = v;
                    best.index = row + k;
                }
            }
        }
    }
    return best;
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", &disk_grid_max_scalar, &gap2_grid_max_scalar,
                                 &gap3_grid_max_scalar};
    return backend;
}

}  // namespace coeffgap::kernels
