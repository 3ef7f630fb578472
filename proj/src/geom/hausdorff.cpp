#include "loopforge/geom/hausdorff.hpp"

#include <algorithm>
#include <cmath>

#include "loopforge/error.hpp"
#include "loopforge/geom/kernels.hpp"

namespace loopforge::geom {

namespace {

double pick_step(const std::vector<Point>& c1, const std::vector<Point>& c2) {
    std::vector<double> lens;
    auto collect = [&](const std::vector<Point>& c) {
        const size_t n = c.size();
        for (size_t i = 0; i < n; ++i) {
            const double l = dist(c[i], c[(i + 1) % n]);
            if (l > 0.0) lens.push_back(l);
        }
    };
    collect(c1);
    collect(c2);
    if (lens.empty()) return 1.0;
    std::nth_element(lens.begin(), lens.begin() + lens.size() / 2, lens.end());
    return lens[lens.size() / 2] / 4.0;
}

double directed(const std::vector<Point>& from, const kernels::SegmentSoA& to, double step) {
    double worst2 = 0.0;
    const size_t n = from.size();
    for (size_t i = 0; i < n; ++i) {
        const Point a = from[i];
        const Point b = from[(i + 1) % n];
        worst2 = std::max(worst2, kernels::min_dist2_point_segments(a, to));
        const double l = dist(a, b);
        const int extra = l > step ? static_cast<int>(std::ceil(l / step)) - 1 : 0;
        for (int k = 1; k <= extra; ++k) {
            const Point p = lerp(a, b, static_cast<double>(k) / (extra + 1));
            worst2 = std::max(worst2, kernels::min_dist2_point_segments(p, to));
        }
    }
    return std::sqrt(worst2);
}

} // namespace

double directed_hausdorff(const std::vector<Point>& from, const std::vector<Point>& to,
                          double sample_step) {
    if (from.empty() || to.empty()) throw PreconditionError("hausdorff: empty curve");
    const double step = sample_step > 0.0 ? sample_step : pick_step(from, to);
    return directed(from, kernels::SegmentSoA::from_closed(to), step);
}

double hausdorff_gap(const std::vector<Point>& c1, const std::vector<Point>& c2,
                     double sample_step) {
    if (c1.empty() || c2.empty()) throw PreconditionError("hausdorff: empty curve");
    if (c1 == c2) return 0.0;
    const double step = sample_step > 0.0 ? sample_step : pick_step(c1, c2);
    const auto s1 = kernels::SegmentSoA::from_closed(c1);
    const auto s2 = kernels::SegmentSoA::from_closed(c2);
    return std::max(directed(c1, s2, step), directed(c2, s1, step));
}

} // namespace loopforge::geom
