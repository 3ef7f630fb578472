#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "loopforge/geom/point.hpp"

namespace loopforge::geom {

using Rational = boost::multiprecision::cpp_rational;

/// Sign of twice the signed area of triangle (a,b,c): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Never misclassifies: a floating-point filter
/// decides the easy cases and the rest fall back to rational arithmetic.
int orient2d(Point a, Point b, Point c);

/// Same predicate evaluated entirely in rational arithmetic (no filter).
int orient2d_exact(Point a, Point b, Point c);

/// p lies on the closed segment [a,b]. Exact.
bool on_segment(Point p, Point a, Point b);

/// p lies strictly inside the open segment (a,b). Exact.
bool strictly_inside_segment(Point p, Point a, Point b);

enum class SegXKind {
    none,            // disjoint
    transverse,      // interiors cross at one point
    endpoint_touch,  // touch at an endpoint of at least one segment,
                     // or an endpoint lies on the other's interior
    overlap,         // collinear with a common piece of positive length
};

/// Exact intersection point of two non-parallel lines/segments.
struct ExactPoint {
    Rational x, y;
    Point rounded() const {
        return {static_cast<double>(x), static_cast<double>(y)};
    }
};

struct SegX {
    SegXKind kind = SegXKind::none;
    ExactPoint at;   // set for transverse; for endpoint_touch the touch point
    double t1 = 0.0; // parameter of the intersection along segment 1 (approx)
    double t2 = 0.0; // along segment 2 (approx)
};

/// Exact classification of how two segments meet. For transverse crossings
/// the intersection point is reported exactly (rational) plus rounded
/// parameters along both segments.
SegX segment_intersect(const Segment& s1, const Segment& s2);

/// True iff the open interiors of the two segments cross transversally.
/// Cheaper than segment_intersect when the point is not needed.
bool segments_cross_interior(const Segment& s1, const Segment& s2);

} // namespace loopforge::geom
