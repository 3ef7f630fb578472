#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "loopforge/geom/exact.hpp"
#include "loopforge/geom/point.hpp"

namespace loopforge::geom {

/// A ring is a closed polygon stored without repeating the first vertex.
using Ring = std::vector<Point>;

enum class Location { inside, boundary, outside };

/// Exact classification of p against the closed region bounded by `ring`.
/// The ring must be simple; orientation does not matter.
Location point_in_ring(Point p, const Ring& ring);

/// Winding number of the ring around p. p must not lie on the boundary.
int winding_number(const Ring& ring, Point p);

/// +1 counterclockwise, -1 clockwise, 0 degenerate. Exact sign.
int ring_orientation(const Ring& ring);

/// Twice the signed area (floating point; use ring_orientation for the sign).
double ring_signed_area2(const Ring& ring);

double ring_length(const Ring& ring);

Box ring_bbox(const Ring& ring);

/// Calls fn(i, j) for every pair of edges (i from A, j from B) whose
/// bounding boxes overlap. Pass the same ring twice to enumerate pairs
/// within one ring (then only pairs with i < j are reported).
void for_each_overlapping_edge_pair(const Ring& a, const Ring& b,
                                    const std::function<void(size_t, size_t)>& fn);

struct SimplicityViolation {
    size_t edge1 = 0;
    size_t edge2 = 0;
};

/// ok (= nullopt) iff no two non-adjacent edges intersect at all and
/// adjacent edges meet only at their shared vertex. Repeated consecutive
/// vertices throw PreconditionError; fewer than 3 vertices likewise.
std::optional<SimplicityViolation> find_simplicity_violation(const Ring& ring);

/// Simplicity up to exactly-doubled excursions: spikes that walk out along a
/// chain of vertices and return along the identical chain are stripped and
/// the remainder must be simple. Used for tagged resolution frames, which
/// contain an arc traversed twice in opposite directions.
bool is_weakly_simple(const Ring& ring);

/// Removes doubled spikes (… m, q1..qk, l, qk..q1, m …) from a closed ring.
/// Returns the stripped ring; out_spike_len accumulates the length removed.
Ring strip_doubled_spikes(const Ring& ring, double* out_spike_len = nullptr);

/// A point strictly inside a simple ring.
Point interior_point_of_ring(const Ring& ring);

/// Position of a point on a ring's boundary.
struct BoundaryRef {
    size_t edge = 0;        // edge index (vertex i -> vertex i+1)
    bool at_vertex = false; // true when the point equals vertex `edge`
};

/// Locates p on the boundary of the ring, if it is there. Exact.
std::optional<BoundaryRef> locate_on_ring(const Ring& ring, Point p);

enum class DirClass { into_interior, along_boundary, into_exterior };

/// Classifies the direction from a boundary point `from` toward `toward`
/// relative to the closed region bounded by a *counterclockwise* simple
/// ring: does an infinitesimal step enter the interior, stay on the
/// boundary, or leave the region? Exact.
DirClass direction_from_boundary(const Ring& ccw_ring, const BoundaryRef& where,
                                 Point from, Point toward);

/// Certificate-grade containment test: is the image of ring B inside the
/// closed disc bounded by simple ring A? Touching (shared arcs, tangencies)
/// is allowed. When not contained, a witness point strictly outside A (or a
/// proper-crossing location) is reported.
struct ContainmentResult {
    bool contained = false;
    bool touching = false;
    Point witness{};
    std::string why;
};

ContainmentResult image_in_closed_disc(const Ring& b, const Ring& a);

/// True if the open segment (p,q) stays inside the closed region bounded by
/// the simple ring (endpoints may lie on the boundary).
bool segment_in_closed_region(Point p, Point q, const Ring& ring);

} // namespace loopforge::geom
