#include <algorithm>
#include <cmath>
#include <limits>

#include "loopforge/geom/kernels.hpp"

namespace loopforge::geom::kernels {

// Reference kernels. The SIMD variants must match these bit for bit; keep
// the exact operation order in sync with kernels_avx2.cpp.

double min_dist2_scalar(Point p, const SegmentSoA& s) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < s.count; ++i) {
        const double apx = p.x - s.ax[i];
        const double apy = p.y - s.ay[i];
        const double t0 = (apx * s.abx[i] + apy * s.aby[i]) / s.len2[i];
        const double t = std::min(std::max(t0, 0.0), 1.0);
        const double dx = apx - t * s.abx[i];
        const double dy = apy - t * s.aby[i];
        const double d2 = dx * dx + dy * dy;
        best = std::min(best, d2);
    }
    return best;
}

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kErrBoundA = (3.0 + 16.0 * kEps) * kEps;
} // namespace

void orient_filter_scalar(size_t n, const double* ax, const double* ay,
                          const double* bx, const double* by, const double* cx,
                          const double* cy, int8_t* out) {
    for (size_t i = 0; i < n; ++i) {
        const double detleft = (bx[i] - ax[i]) * (cy[i] - ay[i]);
        const double detright = (by[i] - ay[i]) * (cx[i] - ax[i]);
        const double det = detleft - detright;
        const double detsum = std::abs(detleft) + std::abs(detright);
        if (std::abs(det) > kErrBoundA * detsum)
            out[i] = det > 0.0 ? int8_t{1} : int8_t{-1};
        else
            out[i] = 0;
    }
}

const Kernels& scalar_kernels() {
    static const Kernels k{&min_dist2_scalar, &orient_filter_scalar, "scalar"};
    return k;
}

} // namespace loopforge::geom::kernels
