#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "loopforge/geom/kernels.hpp"

// AVX2 variants of the reference kernels in kernels_scalar.cpp. Every lane
// performs the same correctly-rounded operations as the scalar code, so the
// results are bit-identical; the equivalence suite asserts this.

namespace loopforge::geom::kernels {

namespace {

inline double hmin4(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_min_pd(lo, hi);
    m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
constexpr double kErrBoundA = (3.0 + 16.0 * kEps) * kEps;

} // namespace

double min_dist2_avx2(Point p, const SegmentSoA& s) {
    const size_t n = s.count;
    const size_t nvec = n / 4 * 4;
    const __m256d px = _mm256_set1_pd(p.x);
    const __m256d py = _mm256_set1_pd(p.y);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    for (size_t i = 0; i < nvec; i += 4) {
        const __m256d apx = _mm256_sub_pd(px, _mm256_loadu_pd(&s.ax[i]));
        const __m256d apy = _mm256_sub_pd(py, _mm256_loadu_pd(&s.ay[i]));
        const __m256d abx = _mm256_loadu_pd(&s.abx[i]);
        const __m256d aby = _mm256_loadu_pd(&s.aby[i]);
        const __m256d len2 = _mm256_loadu_pd(&s.len2[i]);
        const __m256d dotv =
            _mm256_add_pd(_mm256_mul_pd(apx, abx), _mm256_mul_pd(apy, aby));
        const __m256d t0 = _mm256_div_pd(dotv, len2);
        const __m256d t = _mm256_min_pd(_mm256_max_pd(t0, zero), one);
        const __m256d dx = _mm256_sub_pd(apx, _mm256_mul_pd(t, abx));
        const __m256d dy = _mm256_sub_pd(apy, _mm256_mul_pd(t, aby));
        const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        best = _mm256_min_pd(best, d2);
    }
    double out = hmin4(best);
    for (size_t i = nvec; i < n; ++i) {
        const double apx = p.x - s.ax[i];
        const double apy = p.y - s.ay[i];
        const double t0 = (apx * s.abx[i] + apy * s.aby[i]) / s.len2[i];
        const double t = std::min(std::max(t0, 0.0), 1.0);
        const double dx = apx - t * s.abx[i];
        const double dy = apy - t * s.aby[i];
        out = std::min(out, dx * dx + dy * dy);
    }
    return out;
}

void orient_filter_avx2(size_t n, const double* ax, const double* ay,
                        const double* bx, const double* by, const double* cx,
                        const double* cy, int8_t* out) {
    const __m256d errA = _mm256_set1_pd(kErrBoundA);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const size_t nvec = n / 4 * 4;
    for (size_t i = 0; i < nvec; i += 4) {
        const __m256d axv = _mm256_loadu_pd(&ax[i]);
        const __m256d ayv = _mm256_loadu_pd(&ay[i]);
        const __m256d detleft = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(&bx[i]), axv),
                                              _mm256_sub_pd(_mm256_loadu_pd(&cy[i]), ayv));
        const __m256d detright = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(&by[i]), ayv),
                                               _mm256_sub_pd(_mm256_loadu_pd(&cx[i]), axv));
        const __m256d det = _mm256_sub_pd(detleft, detright);
        const __m256d detsum = _mm256_add_pd(_mm256_and_pd(detleft, absmask),
                                             _mm256_and_pd(detright, absmask));
        const __m256d certain =
            _mm256_cmp_pd(_mm256_and_pd(det, absmask), _mm256_mul_pd(errA, detsum), _CMP_GT_OQ);
        const __m256d pos = _mm256_cmp_pd(det, _mm256_setzero_pd(), _CMP_GT_OQ);
        const int mc = _mm256_movemask_pd(certain);
        const int mp = _mm256_movemask_pd(pos);
        for (int l = 0; l < 4; ++l)
            out[i + l] = (mc >> l & 1) ? ((mp >> l & 1) ? int8_t{1} : int8_t{-1}) : int8_t{0};
    }
    if (nvec < n)
        scalar_kernels().orient_filter_batch(n - nvec, ax + nvec, ay + nvec, bx + nvec,
                                             by + nvec, cx + nvec, cy + nvec, out + nvec);
}

const Kernels* avx2_kernels_impl() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Kernels k{&min_dist2_avx2, &orient_filter_avx2, "avx2"};
    return &k;
}

} // namespace loopforge::geom::kernels
