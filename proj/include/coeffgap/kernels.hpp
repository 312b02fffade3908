#pragma once

#include <cstdint>
#include <string>

#include "coeffgap/parallel.hpp"

namespace coeffgap::kernels {

/// Which successive-coefficient functional a gap kernel evaluates.
enum class GapOp { up, down, diff };

/// Polar grid over the closed unit disk: radii (inclusive endpoints) plus
/// angle tables. cos2/sin2 are the double-angle tables used by the disk
/// objective; gap kernels leave them null.
struct PolarGrid {
    const double* r = nullptr;
    std::int64_t nr = 0;
    const double* cos1 = nullptr;
    const double* sin1 = nullptr;
    const double* cos2 = nullptr;
    const double* sin2 = nullptr;
    std::int64_t nth = 0;
};

/// max over the grid slice of |a + b z + c z^2| + 1 - |z|^2, z = r e^{i th}.
/// Rows are radius indices; flat index = ir * nth + ith.
using DiskGridFn = BestPoint (*)(double a, double b, double c, const PolarGrid& g,
                                 std::int64_t row_begin, std::int64_t row_end);

/// max over x = r e^{i th} of the n = 2 gap functional on the LZ chart at
/// fixed p. Flat index = ir * nth + ith.
using Gap2GridFn = BestPoint (*)(GapOp op, double p, const PolarGrid& x,
                                 std::int64_t row_begin, std::int64_t row_end);

/// max over (x, y) of the n = 3 gap functional on the LZ chart at fixed p.
/// Outer index = ir * x.nth + ith over x; the kernel sweeps the full y grid
/// per outer point. Flat index = ((ir * x.nth + ith) * y.nr + is) * y.nth + itau.
using Gap3GridFn = BestPoint (*)(GapOp op, double p, const PolarGrid& x, const PolarGrid& y,
                                 std::int64_t outer_begin, std::int64_t outer_end);

struct Backend {
    const char* name;
    DiskGridFn disk_grid_max;
    Gap2GridFn gap2_grid_max;
    Gap3GridFn gap3_grid_max;
};

/// Reference implementation (plain loops, strict ascending-index tie-break).
const Backend& scalar_backend();

/// AVX2 implementation; null when not compiled in.
const Backend* avx2_backend();

/// Backend selected once per process: AVX2 when the CPU supports it, else
/// scalar. COEFFGAP_SIMD=scalar|avx2|auto overrides.
const Backend& active_backend();

/// True when the running CPU can execute the AVX2 variants.
bool cpu_has_avx2();

}  // namespace coeffgap::kernels
