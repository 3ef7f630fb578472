#include "loopforge/geom/exact.hpp"

#include <algorithm>
#include <limits>

namespace loopforge::geom {

double dist2_point_segment(Point p, Point a, Point b) {
    const Point ab = b - a;
    const Point ap = p - a;
    const double len2 = norm2(ab);
    if (len2 == 0.0) return norm2(ap);
    double t = dot(ap, ab) / len2;
    t = std::min(std::max(t, 0.0), 1.0);
    const Point c{a.x + t * ab.x, a.y + t * ab.y};
    return dist2(p, c);
}

double dist_point_segment(Point p, Point a, Point b) {
    return std::sqrt(dist2_point_segment(p, a, b));
}

double polyline_length(const std::vector<Point>& pts) {
    double len = 0.0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) len += dist(pts[i], pts[i + 1]);
    return len;
}

namespace {

// Shewchuk's static filter bound for the 2d orientation determinant.
constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0; // 2^-53
constexpr double kErrBoundA = (3.0 + 16.0 * kEps) * kEps;

int sign_of(const Rational& r) { return r.sign(); }

Rational rational_det(Point a, Point b, Point c) {
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

} // namespace

int orient2d_exact(Point a, Point b, Point c) {
    return sign_of(rational_det(a, b, c));
}

int orient2d(Point a, Point b, Point c) {
    const double detleft = (b.x - a.x) * (c.y - a.y);
    const double detright = (b.y - a.y) * (c.x - a.x);
    const double det = detleft - detright;
    const double detsum = std::abs(detleft) + std::abs(detright);
    if (std::abs(det) > kErrBoundA * detsum) return det > 0.0 ? 1 : -1;
    return orient2d_exact(a, b, c);
}

bool on_segment(Point p, Point a, Point b) {
    if (orient2d(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool strictly_inside_segment(Point p, Point a, Point b) {
    return on_segment(p, a, b) && p != a && p != b;
}

bool segments_cross_interior(const Segment& s1, const Segment& s2) {
    const int o1 = orient2d(s1.a, s1.b, s2.a);
    const int o2 = orient2d(s1.a, s1.b, s2.b);
    if (o1 * o2 >= 0) return false;
    const int o3 = orient2d(s2.a, s2.b, s1.a);
    const int o4 = orient2d(s2.a, s2.b, s1.b);
    return o3 * o4 < 0;
}

SegX segment_intersect(const Segment& s1, const Segment& s2) {
    SegX r;
    if (!Box::of(s1.a, s1.b).overlaps(Box::of(s2.a, s2.b))) return r;

    const int o1 = orient2d(s1.a, s1.b, s2.a);
    const int o2 = orient2d(s1.a, s1.b, s2.b);
    const int o3 = orient2d(s2.a, s2.b, s1.a);
    const int o4 = orient2d(s2.a, s2.b, s1.b);

    if (o1 == 0 && o2 == 0) {
        // Collinear. Project onto the dominant axis and compare intervals.
        const bool use_x = std::abs(s1.b.x - s1.a.x) >= std::abs(s1.b.y - s1.a.y);
        auto coord = [use_x](Point p) { return use_x ? p.x : p.y; };
        double lo1 = std::min(coord(s1.a), coord(s1.b)), hi1 = std::max(coord(s1.a), coord(s1.b));
        double lo2 = std::min(coord(s2.a), coord(s2.b)), hi2 = std::max(coord(s2.a), coord(s2.b));
        const double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return r;
        if (lo == hi) {
            r.kind = SegXKind::endpoint_touch;
            const Point p = coord(s1.a) == lo ? s1.a : (coord(s1.b) == lo ? s1.b : (coord(s2.a) == lo ? s2.a : s2.b));
            r.at = ExactPoint{Rational(p.x), Rational(p.y)};
            return r;
        }
        r.kind = SegXKind::overlap;
        return r;
    }

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        r.kind = SegXKind::transverse;
        // Intersection of supporting lines, exact.
        const Rational ax(s1.a.x), ay(s1.a.y), bx(s1.b.x), by(s1.b.y);
        const Rational cx(s2.a.x), cy(s2.a.y), dx(s2.b.x), dy(s2.b.y);
        const Rational denom = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx);
        const Rational t = ((cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)) / denom;
        const Rational u = ((cx - ax) * (by - ay) - (cy - ay) * (bx - ax)) / denom;
        r.at.x = ax + t * (bx - ax);
        r.at.y = ay + t * (by - ay);
        r.t1 = static_cast<double>(t);
        r.t2 = static_cast<double>(u);
        return r;
    }

    // Not a proper crossing and not collinear: either a touch through an
    // endpoint / an endpoint on an interior, or no contact at all.
    auto touch = [&](Point p, const Segment& s, double& t_out) {
        if (!on_segment(p, s.a, s.b)) return false;
        const Point d = s.b - s.a;
        t_out = std::abs(d.x) >= std::abs(d.y) ? (d.x == 0.0 ? 0.0 : (p.x - s.a.x) / d.x)
                                               : (p.y - s.a.y) / d.y;
        return true;
    };
    double t;
    if (touch(s2.a, s1, t)) {
        r.kind = SegXKind::endpoint_touch;
        r.at = ExactPoint{Rational(s2.a.x), Rational(s2.a.y)};
        r.t1 = t;
        r.t2 = 0.0;
        return r;
    }
    if (touch(s2.b, s1, t)) {
        r.kind = SegXKind::endpoint_touch;
        r.at = ExactPoint{Rational(s2.b.x), Rational(s2.b.y)};
        r.t1 = t;
        r.t2 = 1.0;
        return r;
    }
    if (touch(s1.a, s2, t)) {
        r.kind = SegXKind::endpoint_touch;
        r.at = ExactPoint{Rational(s1.a.x), Rational(s1.a.y)};
        r.t1 = 0.0;
        r.t2 = t;
        return r;
    }
    if (touch(s1.b, s2, t)) {
        r.kind = SegXKind::endpoint_touch;
        r.at = ExactPoint{Rational(s1.b.x), Rational(s1.b.y)};
        r.t1 = 1.0;
        r.t2 = t;
        return r;
    }
    return r;
}

} // namespace loopforge::geom
