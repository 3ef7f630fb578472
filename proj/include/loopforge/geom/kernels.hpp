#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "loopforge/geom/point.hpp"

namespace loopforge::geom::kernels {

/// Structure-of-arrays segment soup, padded to the SIMD width. The padding
/// repeats the last segment so reductions over the padded tail are no-ops.
struct SegmentSoA {
    std::vector<double> ax, ay;   // segment start
    std::vector<double> abx, aby; // b - a, precomputed once so every kernel
    std::vector<double> len2;     // |b - a|^2   sees bit-identical inputs
    size_t count = 0;             // real segment count (arrays may be longer)

    static SegmentSoA from_closed(const std::vector<Point>& ring);
    static SegmentSoA from_open(const std::vector<Point>& polyline);
};

/// min over segments of squared distance from p. Scalar and SIMD variants
/// produce bit-identical results (same per-element operations, and min is
/// order-independent for non-NaN values).
using MinDist2Fn = double (*)(Point p, const SegmentSoA& segs);

/// Orientation filter applied to n independent triples (a[i], b[i], c[i]).
/// out[i] is +1 or -1 when the floating-point filter certifies the sign and
/// 0 when it cannot (caller falls back to the exact predicate).
using OrientFilterFn = void (*)(size_t n, const double* ax, const double* ay,
                                const double* bx, const double* by,
                                const double* cx, const double* cy,
                                int8_t* out);

struct Kernels {
    MinDist2Fn min_dist2_point_segments;
    OrientFilterFn orient_filter_batch;
    const char* name;
};

const Kernels& scalar_kernels();
const Kernels* avx2_kernels(); // nullptr when not compiled in or CPU lacks AVX2

/// The variant selected at startup: AVX2 when the CPU supports it, else
/// scalar. Set LOOPFORGE_KERNEL=scalar in the environment to force scalar.
const Kernels& active();

inline double min_dist2_point_segments(Point p, const SegmentSoA& segs) {
    return active().min_dist2_point_segments(p, segs);
}

} // namespace loopforge::geom::kernels
