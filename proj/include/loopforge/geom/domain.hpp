#pragma once

#include <memory>

#include "loopforge/geom/mesh.hpp"
#include "loopforge/geom/polygon.hpp"

namespace loopforge::geom {

/// The ambient region all curves live in: a simple polygon with a refinement
/// mesh for geodesic queries and a certified diameter estimate.
struct PolyDomain {
    Ring boundary; // counterclockwise
    double mesh_h = 0.25;
    std::shared_ptr<const Mesh> mesh;

    double diameter_d = 0.0;        // geodesic diameter over the sample set
    double diameter_sampling = 0.0; // sampling density recorded for the cert

    bool contains(Point p) const { return point_in_ring(p, boundary) != Location::outside; }
};

/// Builds the mesh and (optionally) the diameter cache. Throws on a
/// non-simple boundary.
PolyDomain make_domain(Ring boundary, double mesh_h, bool with_diameter = true);

struct GeodesicPath {
    std::vector<Point> path; // from p to q, straightened
    double length = 0.0;
    double tol = 0.0; // h * (hop count of the mesh path before straightening)
};

/// Shortest path between two points of the closed domain along the
/// refinement graph, then straightened inside the region.
GeodesicPath geodesic(const PolyDomain& dom, Point p, Point q);

double geodesic_distance(const PolyDomain& dom, Point p, Point q);

/// Max geodesic distance over boundary vertices x mesh nodes, with the top
/// candidates straightened. Recorded sampling density = mesh h.
double domain_diameter(const PolyDomain& dom);

} // namespace loopforge::geom
