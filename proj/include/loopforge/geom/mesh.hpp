#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "loopforge/geom/polygon.hpp"

namespace loopforge::geom {

/// Triangulated, refined planar region: a simple polygon, optionally with
/// one hole (the annulus case). Triangulation is ear clipping after bridging
/// the hole to the outer boundary; refinement is 1-to-4 subdivision until
/// every edge is at most `h`. The refinement graph serves Dijkstra queries;
/// exact segment-in-region tests back path straightening.
struct Mesh {
    std::vector<Point> nodes;
    std::vector<std::array<uint32_t, 3>> tris;
    std::vector<std::vector<std::pair<uint32_t, double>>> adj;
    double h = 0.0; // achieved max edge length

    Ring outer;               // counterclockwise
    std::optional<Ring> hole; // counterclockwise

    // nodes lying on the respective input boundaries (original vertices plus
    // refinement midpoints)
    std::vector<uint32_t> outer_nodes;
    std::vector<uint32_t> hole_nodes;

    // boundary corners that can pin a taut path: reflex vertices of the
    // outer ring and convex vertices of the hole
    std::vector<Point> pivots;

    bool point_in_region(Point p) const;
    bool segment_in_region(Point p, Point q) const;
    uint32_t nearest_node(Point p) const;
    std::vector<uint32_t> nodes_within(Point p, double radius) const;
};

Mesh triangulate_region(const Ring& outer, const Ring* hole, double target_h,
                        int max_subdiv = 8);

struct DijkstraResult {
    std::vector<double> dist;
    std::vector<int32_t> parent;
};

DijkstraResult dijkstra(const Mesh& m, uint32_t src);
DijkstraResult dijkstra_multi(const Mesh& m, const std::vector<uint32_t>& srcs);

std::vector<uint32_t> extract_path(const DijkstraResult& d, uint32_t dst);

/// Greedy straightening: replaces node chains by straight segments whenever
/// the segment stays inside the region. Only ever shortens the path.
std::vector<Point> shortcut_path(const Mesh& m, std::vector<Point> path);

/// True if the open segment avoids the open region bounded by `ring`
/// (touching the boundary is fine). The mirror of segment_in_closed_region.
bool segment_avoids_open_region(Point p, Point q, const Ring& ring);

} // namespace loopforge::geom
