#include <cstdlib>
#include <cstring>

#include "loopforge/geom/kernels.hpp"

namespace loopforge::geom::kernels {

double min_dist2_scalar(Point p, const SegmentSoA& s);
#if LOOPFORGE_BUILD_AVX2
const Kernels* avx2_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#if LOOPFORGE_BUILD_AVX2
    return avx2_kernels_impl();
#else
    return nullptr;
#endif
}

const Kernels& active() {
    static const Kernels* chosen = [] {
        const char* force = std::getenv("LOOPFORGE_KERNEL");
        if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels();
        if (const Kernels* k = avx2_kernels()) return k;
        return &scalar_kernels();
    }();
    return *chosen;
}

namespace {

void push_segment(SegmentSoA& s, Point a, Point b) {
    s.ax.push_back(a.x);
    s.ay.push_back(a.y);
    s.abx.push_back(b.x - a.x);
    s.aby.push_back(b.y - a.y);
    // A degenerate segment would divide by zero in the kernels; treat it as
    // its endpoint by forcing t to clamp at 0.
    const double l2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    s.len2.push_back(l2 == 0.0 ? 1.0 : l2);
    if (l2 == 0.0) {
        s.abx.back() = 0.0;
        s.aby.back() = 0.0;
    }
}

void pad(SegmentSoA& s) {
    s.count = s.ax.size();
    while (s.ax.size() % 4 != 0) {
        s.ax.push_back(s.ax.back());
        s.ay.push_back(s.ay.back());
        s.abx.push_back(s.abx.back());
        s.aby.push_back(s.aby.back());
        s.len2.push_back(s.len2.back());
    }
}

} // namespace

SegmentSoA SegmentSoA::from_closed(const std::vector<Point>& ring) {
    SegmentSoA s;
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) push_segment(s, ring[i], ring[(i + 1) % n]);
    pad(s);
    return s;
}

SegmentSoA SegmentSoA::from_open(const std::vector<Point>& polyline) {
    SegmentSoA s;
    if (polyline.size() == 1) push_segment(s, polyline[0], polyline[0]);
    for (size_t i = 0; i + 1 < polyline.size(); ++i)
        push_segment(s, polyline[i], polyline[i + 1]);
    pad(s);
    return s;
}

} // namespace loopforge::geom::kernels
