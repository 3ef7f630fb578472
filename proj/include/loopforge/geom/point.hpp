#pragma once

#include <cmath>
#include <vector>

namespace loopforge::geom {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
    friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return a.x * a.x + a.y * a.y; }
inline double norm(Point a) { return std::sqrt(norm2(a)); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist2(Point a, Point b) { return norm2(a - b); }

inline Point lerp(Point a, Point b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

struct Segment {
    Point a;
    Point b;
    bool degenerate() const { return a == b; }
};

/// Closed axis-aligned box; default-constructed box is empty.
struct Box {
    double xmin = 1.0, ymin = 1.0, xmax = 0.0, ymax = 0.0;

    bool empty() const { return xmin > xmax; }
    void expand(Point p) {
        if (empty()) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
        } else {
            if (p.x < xmin) xmin = p.x;
            if (p.x > xmax) xmax = p.x;
            if (p.y < ymin) ymin = p.y;
            if (p.y > ymax) ymax = p.y;
        }
    }
    bool overlaps(const Box& o) const {
        return !empty() && !o.empty() && xmin <= o.xmax && o.xmin <= xmax &&
               ymin <= o.ymax && o.ymin <= ymax;
    }
    static Box of(Point a, Point b) {
        Box r;
        r.expand(a);
        r.expand(b);
        return r;
    }
    static Box of(const std::vector<Point>& pts) {
        Box r;
        for (Point p : pts) r.expand(p);
        return r;
    }
};

/// Exact distance from p to the closed segment [a,b] (floating point, but a
/// pure function of its inputs; used by the kernels module for batches).
double dist_point_segment(Point p, Point a, Point b);
double dist2_point_segment(Point p, Point a, Point b);

/// Total length of an open polyline.
double polyline_length(const std::vector<Point>& pts);

} // namespace loopforge::geom
