#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "loopforge/geom/mesh.hpp"
#include "loopforge/geom/polygon.hpp"

namespace loopforge::curves {

using geom::Point;
using geom::Ring;

/// An oriented simple closed polygon. After assign_disc the vertex order is
/// counterclockwise, so the designated disc (the bounded complementary
/// component) lies to the left of the traversal.
class PolyCurve {
public:
    PolyCurve() = default;
    explicit PolyCurve(Ring vertices);

    const Ring& ring() const { return vertices_; }
    size_t size() const { return vertices_.size(); }
    Point vertex(size_t i) const { return vertices_[i % vertices_.size()]; }
    geom::Segment edge(size_t i) const {
        return {vertices_[i % vertices_.size()], vertices_[(i + 1) % vertices_.size()]};
    }
    double length() const { return length_; }
    bool disc_assigned() const { return disc_assigned_; }

    /// Cyclic parameter: edge index + fraction, in [0, size()).
    Point at_param(double param) const;
    double param_wrap(double param) const;
    /// Arc length walked forward from param a to param b.
    double arc_length(double from_param, double to_param) const;

    friend PolyCurve assign_disc(PolyCurve c, int hint);

private:
    Ring vertices_;
    double length_ = 0.0;
    bool disc_assigned_ = false;
};

/// nullopt = simple. Throws PreconditionError for degenerate input
/// (repeated consecutive vertices, fewer than 3 vertices).
std::optional<geom::SimplicityViolation> validate_simple(const PolyCurve& c);

/// Normalizes the curve so the designated disc is the bounded complementary
/// component (counterclockwise orientation). `hint` is reserved for ambient
/// surfaces where the disc is not canonical; it is ignored in the plane.
PolyCurve assign_disc(PolyCurve c, int hint = 0);

enum class Containment { a_inside_b, b_inside_a, disjoint_discs, crossing };

/// Exact classification of two simple curves' discs against each other.
/// Closure containment: touching curves still count as nested/disjoint as
/// long as neither boundary passes to the other side.
Containment curve_inside(const PolyCurve& a, const PolyCurve& b);

struct IntersectionPoint {
    Point p;
    double param_a = 0.0; // cyclic parameter on a
    double param_b = 0.0; // cyclic parameter on b
    bool transverse = false;
};

/// All intersection points between two simple curves, cyclically ordered
/// along a, with the induced order along b. Non-transverse contacts are
/// flagged. A positive-length overlap throws NonGenericError.
struct IntersectionSet {
    std::vector<IntersectionPoint> points; // sorted by param_a
    std::vector<size_t> order_on_b;        // indices into points, sorted by param_b
    bool empty() const { return points.empty(); }
    size_t size() const { return points.size(); }
};

IntersectionSet intersect_curves(const PolyCurve& a, const PolyCurve& b);

/// Definition: every two intersection points are consecutive on a iff they
/// are consecutive on b.
bool simple_intersection_property(const IntersectionSet& xs);

struct Arc {
    uint32_t parent = 0; // caller-chosen curve tag
    double start_param = 0.0;
    double end_param = 0.0;
    std::vector<Point> points; // forward walk from start to end, inclusive
    double length() const { return geom::polyline_length(points); }
};

/// Forward arc of the curve from one cyclic parameter to another. Equal
/// parameters yield the full curve.
Arc arc_between(const PolyCurve& c, double from_param, double to_param, uint32_t parent_tag = 0);

/// Arcs of `a` cut at the intersection points, in cyclic order. With no cut
/// points, one arc covering the whole curve. Arcs partition the curve.
std::vector<Arc> arcs_between(const PolyCurve& a, const IntersectionSet& cuts,
                              bool use_b_params = false);

/// Closed region between two nested curves (touching allowed), with a
/// triangulated mesh for geodesic and essential-cycle queries.
struct OrientedAnnulus {
    PolyCurve outer;
    PolyCurve inner;
    std::shared_ptr<const geom::Mesh> region; // null when degenerate (outer == inner)
    bool degenerate = false;
};

/// Verifies D(inner) is contained in D(outer) and triangulates the closed
/// annulus between them. Throws PreconditionError when not nested.
OrientedAnnulus make_annulus(PolyCurve outer, PolyCurve inner, double mesh_h);

/// Splices a cyclic sequence of arcs (each ending where the next begins)
/// into a closed curve. Exact endpoint matches required.
PolyCurve splice_arcs(const std::vector<Arc>& arcs);

} // namespace loopforge::curves
