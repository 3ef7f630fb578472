#include "loopforge/curves/curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "loopforge/error.hpp"

namespace loopforge::curves {

using geom::Location;
using geom::Ring;

PolyCurve::PolyCurve(Ring vertices) : vertices_(std::move(vertices)) {
    length_ = geom::ring_length(vertices_);
}

double PolyCurve::param_wrap(double param) const {
    const double n = static_cast<double>(vertices_.size());
    double p = std::fmod(param, n);
    if (p < 0) p += n;
    return p;
}

Point PolyCurve::at_param(double param) const {
    const double p = param_wrap(param);
    const size_t i = std::min(static_cast<size_t>(p), vertices_.size() - 1);
    const double t = p - static_cast<double>(i);
    if (t == 0.0) return vertices_[i];
    return lerp(vertices_[i], vertices_[(i + 1) % vertices_.size()], t);
}

double PolyCurve::arc_length(double from_param, double to_param) const {
    const Arc a = arc_between(*this, from_param, to_param);
    return a.length();
}

std::optional<geom::SimplicityViolation> validate_simple(const PolyCurve& c) {
    return geom::find_simplicity_violation(c.ring());
}

PolyCurve assign_disc(PolyCurve c, int /*hint*/) {
    const int o = geom::ring_orientation(c.vertices_);
    if (o == 0) throw PreconditionError("assign_disc: degenerate (zero-area) curve");
    if (o < 0) std::reverse(c.vertices_.begin(), c.vertices_.end());
    c.disc_assigned_ = true;
    return c;
}

namespace {

// Contact analysis shared by curve_inside and intersect_curves.
struct Contact {
    Point p;
    double param_a;
    double param_b;
    bool transverse; // local side change of a across b
};

double edge_param(const PolyCurve& c, size_t edge, Point p) {
    const geom::Segment e = c.edge(edge);
    const Point d = e.b - e.a;
    const double t = std::abs(d.x) >= std::abs(d.y)
                         ? (d.x == 0.0 ? 0.0 : (p.x - e.a.x) / d.x)
                         : (p.y - e.a.y) / d.y;
    return static_cast<double>(edge) + std::clamp(t, 0.0, 1.0);
}

// Does curve `c` locally cross the boundary of `other` at point p on both?
// True when c's two local directions at p leave to opposite sides of other.
bool local_side_change(const PolyCurve& c, double param_on_c, const Ring& other_ccw,
                       const geom::BoundaryRef& where, Point p) {
    const size_t n = c.size();
    const double par = c.param_wrap(param_on_c);
    const size_t i = std::min(static_cast<size_t>(par), n - 1);
    const double t = par - static_cast<double>(i);
    Point back, fwd;
    if (t == 0.0) {
        back = c.vertex(i + n - 1);
        fwd = c.vertex(i + 1);
    } else {
        back = c.vertex(i);
        fwd = c.vertex(i + 1);
    }
    const auto db = geom::direction_from_boundary(other_ccw, where, p, back);
    const auto df = geom::direction_from_boundary(other_ccw, where, p, fwd);
    // along_boundary contacts never certify a crossing by themselves
    return (db == geom::DirClass::into_interior && df == geom::DirClass::into_exterior) ||
           (db == geom::DirClass::into_exterior && df == geom::DirClass::into_interior);
}

std::vector<Contact> collect_contacts(const PolyCurve& a, const PolyCurve& b) {
    const Ring& ra = a.ring();
    const Ring rb_ccw = geom::ring_orientation(b.ring()) >= 0
                            ? b.ring()
                            : Ring(b.ring().rbegin(), b.ring().rend());

    std::map<std::pair<double, double>, Contact> by_point; // keyed by rounded coords
    bool overlap = false;
    geom::for_each_overlapping_edge_pair(ra, b.ring(), [&](size_t i, size_t j) {
        const geom::SegX x = geom::segment_intersect(a.edge(i), b.edge(j));
        if (x.kind == geom::SegXKind::none) return;
        if (x.kind == geom::SegXKind::overlap) {
            overlap = true;
            return;
        }
        const Point p = x.at.rounded();
        Contact c;
        c.p = p;
        if (x.kind == geom::SegXKind::transverse) {
            // Interior-interior crossing: transverse by construction. The
            // rounded point may be off b's boundary, so no wedge analysis.
            c.param_a = static_cast<double>(i) + std::clamp(x.t1, 0.0, 1.0);
            c.param_b = static_cast<double>(j) + std::clamp(x.t2, 0.0, 1.0);
            c.transverse = true;
        } else {
            // Touch through a vertex/endpoint: the point is an existing
            // vertex, exactly representable; classify by the local wedge.
            c.param_a = edge_param(a, i, p);
            c.param_b = edge_param(b, j, p);
            const auto where = geom::locate_on_ring(rb_ccw, p);
            c.transverse = where && local_side_change(a, c.param_a, rb_ccw, *where, p);
        }
        by_point.insert({{p.x, p.y}, c});
    });
    if (overlap) throw NonGenericError("curves share a positive-length overlap");

    std::vector<Contact> out;
    out.reserve(by_point.size());
    for (auto& [_, c] : by_point) out.push_back(c);
    return out;
}

} // namespace

Containment curve_inside(const PolyCurve& a, const PolyCurve& b) {
    const auto ab = geom::image_in_closed_disc(a.ring(), b.ring());
    if (ab.contained) return Containment::a_inside_b;
    const auto ba = geom::image_in_closed_disc(b.ring(), a.ring());
    if (ba.contained) return Containment::b_inside_a;

    // Neither contained: distinguish crossing from touching-disjoint.
    for (const Point v : a.ring())
        if (geom::point_in_ring(v, b.ring()) == Location::inside) return Containment::crossing;
    for (const Point v : b.ring())
        if (geom::point_in_ring(v, a.ring()) == Location::inside) return Containment::crossing;
    const auto contacts = collect_contacts(a, b);
    for (const Contact& c : contacts)
        if (c.transverse) return Containment::crossing;
    return Containment::disjoint_discs;
}

IntersectionSet intersect_curves(const PolyCurve& a, const PolyCurve& b) {
    IntersectionSet set;
    for (const Contact& c : collect_contacts(a, b))
        set.points.push_back({c.p, c.param_a, c.param_b, c.transverse});
    std::sort(set.points.begin(), set.points.end(),
              [](const IntersectionPoint& l, const IntersectionPoint& r) {
                  return l.param_a < r.param_a;
              });
    set.order_on_b.resize(set.points.size());
    for (size_t i = 0; i < set.points.size(); ++i) set.order_on_b[i] = i;
    std::sort(set.order_on_b.begin(), set.order_on_b.end(), [&](size_t l, size_t r) {
        return set.points[l].param_b < set.points[r].param_b;
    });
    return set;
}

bool simple_intersection_property(const IntersectionSet& xs) {
    const size_t k = xs.size();
    if (k <= 2) return true;
    // position of each point in b's cyclic order
    std::vector<size_t> pos_b(k);
    for (size_t r = 0; r < k; ++r) pos_b[xs.order_on_b[r]] = r;
    for (size_t i = 0; i < k; ++i) {
        const size_t j = (i + 1) % k; // consecutive on a
        const size_t d = (pos_b[j] + k - pos_b[i]) % k;
        if (d != 1 && d != k - 1) return false;
    }
    return true;
}

Arc arc_between(const PolyCurve& c, double from_param, double to_param, uint32_t parent_tag) {
    Arc arc;
    arc.parent = parent_tag;
    arc.start_param = c.param_wrap(from_param);
    arc.end_param = c.param_wrap(to_param);
    const size_t n = c.size();

    arc.points.push_back(c.at_param(arc.start_param));
    double p = arc.start_param;
    // walk forward vertex by vertex until reaching end_param
    const double span = arc.end_param > arc.start_param
                            ? arc.end_param - arc.start_param
                            : static_cast<double>(n) - arc.start_param + arc.end_param;
    double walked = 0.0;
    while (true) {
        const double next_vertex = std::floor(p) + 1.0;
        const double step = next_vertex - p;
        if (walked + step >= span) break;
        walked += step;
        p = c.param_wrap(next_vertex);
        const Point v = c.at_param(p);
        if (v != arc.points.back()) arc.points.push_back(v);
    }
    const Point end = c.at_param(arc.end_param);
    if (arc.points.empty() || end != arc.points.back()) arc.points.push_back(end);
    return arc;
}

std::vector<Arc> arcs_between(const PolyCurve& a, const IntersectionSet& cuts,
                              bool use_b_params) {
    std::vector<Arc> arcs;
    if (cuts.empty()) {
        arcs.push_back(arc_between(a, 0.0, 0.0)); // full-curve walk
        return arcs;
    }
    std::vector<double> params;
    for (const auto& ip : cuts.points) params.push_back(use_b_params ? ip.param_b : ip.param_a);
    std::sort(params.begin(), params.end());
    for (size_t i = 0; i < params.size(); ++i) {
        const double from = params[i];
        const double to = params[(i + 1) % params.size()];
        arcs.push_back(arc_between(a, from, to));
    }
    return arcs;
}

PolyCurve splice_arcs(const std::vector<Arc>& arcs) {
    Ring out;
    for (const Arc& arc : arcs) {
        if (arc.points.empty()) continue;
        if (!out.empty() && out.back() != arc.points.front())
            throw PreconditionError("splice_arcs: arc endpoints do not chain");
        const size_t start = out.empty() ? 0 : 1;
        for (size_t i = start; i < arc.points.size(); ++i) out.push_back(arc.points[i]);
    }
    if (out.size() >= 2 && out.front() == out.back()) out.pop_back();
    if (out.size() < 3) throw PreconditionError("splice_arcs: fewer than 3 vertices");
    return PolyCurve(out);
}

OrientedAnnulus make_annulus(PolyCurve outer, PolyCurve inner, double mesh_h) {
    OrientedAnnulus ann;
    ann.outer = assign_disc(std::move(outer));
    ann.inner = assign_disc(std::move(inner));
    if (ann.outer.ring() == ann.inner.ring()) {
        ann.degenerate = true;
        return ann;
    }
    const auto contained = geom::image_in_closed_disc(ann.inner.ring(), ann.outer.ring());
    if (!contained.contained)
        throw PreconditionError("make_annulus: inner curve not inside outer (witness at " +
                                std::to_string(contained.witness.x) + "," +
                                std::to_string(contained.witness.y) + ")");
    ann.region = std::make_shared<geom::Mesh>(
        geom::triangulate_region(ann.outer.ring(), &ann.inner.ring(), mesh_h));
    return ann;
}

} // namespace loopforge::curves
