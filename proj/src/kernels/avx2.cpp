#include "coeffgap/kernels.hpp"

#ifdef COEFFGAP_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

// AVX2 variants of the reference kernels in scalar.cpp. Per-point expressions
// keep the exact operation order of the reference (and the build disables FMA
// contraction), so results are bit-identical; the equivalence tests assert
// exact equality of value and index.

namespace coeffgap::kernels {

namespace {

// Running 4-lane max with strict-greater updates; indices travel as doubles
// (exact below 2^53). Lane ties are resolved in finish().
struct LaneBest {
    __m256d value = _mm256_set1_pd(-1e308);
    __m256d index = _mm256_set1_pd(-1.0);

    void update(__m256d v, __m256d idx) {
        const __m256d mask = _mm256_cmp_pd(v, value, _CMP_GT_OQ);
        value = _mm256_blendv_pd(value, v, mask);
        index = _mm256_blendv_pd(index, idx, mask);
    }

    // Collapse lanes preferring larger value, then smaller index, and fold in
    // the scalar tail the same way.
    BestPoint finish(const BestPoint& tail) const {
        alignas(32) double vs[4];
        alignas(32) double is[4];
        _mm256_store_pd(vs, value);
        _mm256_store_pd(is, index);
        BestPoint best = tail;
        for (int l = 0; l < 4; ++l) {
            if (is[l] < 0) continue;
            const auto idx = static_cast<std::int64_t>(is[l]);
            if (vs[l] > best.value || (vs[l] == best.value && (best.index < 0 || idx < best.index))) {
                best.value = vs[l];
                best.index = idx;
            }
        }
        return best;
    }
};

const __m256d kLaneOffsets = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

BestPoint disk_grid_max_avx2(double a, double b, double c, const PolarGrid& g,
                             std::int64_t row_begin, std::int64_t row_end) {
    LaneBest lanes;
    BestPoint tail;
    const __m256d va = _mm256_set1_pd(a);
    for (std::int64_t ir = row_begin; ir < row_end; ++ir) {
        const double r = g.r[ir];
        const double br = b * r;
        const double cr2 = c * (r * r);
        const double base = 1.0 - r * r;
        const std::int64_t row = ir * g.nth;
        const __m256d vbr = _mm256_set1_pd(br);
        const __m256d vcr2 = _mm256_set1_pd(cr2);
        const __m256d vbase = _mm256_set1_pd(base);
        __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(row)), kLaneOffsets);
        std::int64_t j = 0;
        for (; j + 4 <= g.nth; j += 4) {
            const __m256d c1 = _mm256_loadu_pd(g.cos1 + j);
            const __m256d s1 = _mm256_loadu_pd(g.sin1 + j);
            const __m256d c2 = _mm256_loadu_pd(g.cos2 + j);
            const __m256d s2 = _mm256_loadu_pd(g.sin2 + j);
            const __m256d re =
                _mm256_add_pd(_mm256_add_pd(va, _mm256_mul_pd(vbr, c1)), _mm256_mul_pd(vcr2, c2));
            const __m256d im = _mm256_add_pd(_mm256_mul_pd(vbr, s1), _mm256_mul_pd(vcr2, s2));
            const __m256d v = _mm256_add_pd(
                _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im))), vbase);
            lanes.update(v, idx);
            idx = _mm256_add_pd(idx, _mm256_set1_pd(4.0));
        }
        for (; j < g.nth; ++j) {
            const double re = a + br * g.cos1[j] + cr2 * g.cos2[j];
            const double im = br * g.sin1[j] + cr2 * g.sin2[j];
            const double v = std::sqrt(re * re + im * im) + base;
            if (v > tail.value) {
                tail.value = v;
                tail.index = row + j;
            }
        }
    }
    return lanes.finish(tail);
}

BestPoint gap2_grid_max_avx2(GapOp op, double p, const PolarGrid& x,
                             std::int64_t row_begin, std::int64_t row_end) {
    LaneBest lanes;
    BestPoint tail;
    const double q = 4.0 - p * p;
    const double p2 = p * p;
    const double a2 = std::fabs(0.5 * p);
    const double hp = 0.5 * p;
    const __m256d vq = _mm256_set1_pd(q);
    const __m256d vp2 = _mm256_set1_pd(p2);
    const __m256d vhalf = _mm256_set1_pd(0.5);
    const __m256d vsix = _mm256_set1_pd(6.0);
    const __m256d va2 = _mm256_set1_pd(a2);
    const __m256d vhp = _mm256_set1_pd(hp);
    for (std::int64_t ir = row_begin; ir < row_end; ++ir) {
        const double r = x.r[ir];
        const std::int64_t row = ir * x.nth;
        const __m256d vr = _mm256_set1_pd(r);
        __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(row)), kLaneOffsets);
        std::int64_t j = 0;
        for (; j + 4 <= x.nth; j += 4) {
            const __m256d xr = _mm256_mul_pd(vr, _mm256_loadu_pd(x.cos1 + j));
            const __m256d xi = _mm256_mul_pd(vr, _mm256_loadu_pd(x.sin1 + j));
            const __m256d p2r = _mm256_mul_pd(vhalf, _mm256_add_pd(vp2, _mm256_mul_pd(vq, xr)));
            const __m256d p2i = _mm256_mul_pd(vhalf, _mm256_mul_pd(vq, xi));
            const __m256d a3r = _mm256_div_pd(_mm256_add_pd(vp2, p2r), vsix);
            const __m256d a3i = _mm256_div_pd(p2i, vsix);
            __m256d v;
            if (op == GapOp::diff) {
                const __m256d dr = _mm256_sub_pd(a3r, vhp);
                v = _mm256_sqrt_pd(
                    _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(a3i, a3i)));
            } else {
                const __m256d m3 = _mm256_sqrt_pd(
                    _mm256_add_pd(_mm256_mul_pd(a3r, a3r), _mm256_mul_pd(a3i, a3i)));
                v = (op == GapOp::down) ? _mm256_sub_pd(va2, m3) : _mm256_sub_pd(m3, va2);
            }
            lanes.update(v, idx);
            idx = _mm256_add_pd(idx, _mm256_set1_pd(4.0));
        }
        for (; j < x.nth; ++j) {
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
            if (v > tail.value) {
                tail.value = v;
                tail.index = row + j;
            }
        }
    }
    return lanes.finish(tail);
}

BestPoint gap3_grid_max_avx2(GapOp op, double p, const PolarGrid& x, const PolarGrid& y,
                             std::int64_t outer_begin, std::int64_t outer_end) {
    LaneBest lanes;
    BestPoint tail;
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
        const double cr = p3 + tqp * xr - pq * x2r;
        const double ci = tqp * xi - pq * x2i;
        const double ar = (p3 + 3.0 * p * p2r + 0.5 * cr) / 24.0;
        const double ai = (3.0 * p * p2i + 0.5 * ci) / 24.0;
        const double yc = 2.0 * q * (1.0 - nrm) / 48.0;
        const double br0 = (op == GapOp::diff) ? ar - a3r : ar;
        const double bi0 = (op == GapOp::diff) ? ai - a3i : ai;
        const std::int64_t plane = o * inner;
        const __m256d vbr0 = _mm256_set1_pd(br0);
        const __m256d vbi0 = _mm256_set1_pd(bi0);
        const __m256d vm3 = _mm256_set1_pd(m3);
        for (std::int64_t is = 0; is < y.nr; ++is) {
            const double w = yc * y.r[is];
            const std::int64_t row = plane + is * y.nth;
            const __m256d vw = _mm256_set1_pd(w);
            __m256d idx = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(row)), kLaneOffsets);
            std::int64_t k = 0;
            for (; k + 4 <= y.nth; k += 4) {
                const __m256d ur = _mm256_add_pd(vbr0, _mm256_mul_pd(vw, _mm256_loadu_pd(y.cos1 + k)));
                const __m256d ui = _mm256_add_pd(vbi0, _mm256_mul_pd(vw, _mm256_loadu_pd(y.sin1 + k)));
                const __m256d m = _mm256_sqrt_pd(
                    _mm256_add_pd(_mm256_mul_pd(ur, ur), _mm256_mul_pd(ui, ui)));
                __m256d v;
                if (op == GapOp::diff) {
                    v = m;
                } else if (op == GapOp::down) {
                    v = _mm256_sub_pd(vm3, m);
                } else {
                    v = _mm256_sub_pd(m, vm3);
                }
                lanes.update(v, idx);
                idx = _mm256_add_pd(idx, _mm256_set1_pd(4.0));
            }
            for (; k < y.nth; ++k) {
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
                if (v > tail.value) {
                    tail.value = v;
                    tail.index = row + k;
                }
            }
        }
    }
    return lanes.finish(tail);
}

const Backend avx2_impl{"avx2", &disk_grid_max_avx2, &gap2_grid_max_avx2, &gap3_grid_max_avx2};

}  // namespace

const Backend* avx2_backend() { return &avx2_impl; }

}  // namespace coeffgap::kernels

#else

namespace coeffgap::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace coeffgap::kernels

#endif
