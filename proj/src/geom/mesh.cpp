#include "loopforge/geom/mesh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "loopforge/error.hpp"

namespace loopforge::geom {

namespace {

// --------------------------------------------------------------- ear clipping

bool point_in_or_on_triangle(Point p, Point a, Point b, Point c) {
    const int o1 = orient2d(a, b, p);
    const int o2 = orient2d(b, c, p);
    const int o3 = orient2d(c, a, p);
    return o1 >= 0 && o2 >= 0 && o3 >= 0;
}

std::vector<std::array<uint32_t, 3>> ear_clip(const std::vector<Point>& poly,
                                              const std::vector<uint32_t>& ids) {
    // poly must be counterclockwise; ids maps local indices to mesh node ids.
    std::vector<std::array<uint32_t, 3>> tris;
    std::vector<uint32_t> alive(poly.size());
    for (uint32_t i = 0; i < poly.size(); ++i) alive[i] = i;

    auto is_ear = [&](size_t k, bool strict_blocking) {
        const size_t m = alive.size();
        const Point u = poly[alive[(k + m - 1) % m]];
        const Point v = poly[alive[k]];
        const Point w = poly[alive[(k + 1) % m]];
        const int turn = orient2d(u, v, w);
        if (turn < 0) return false;
        if (turn == 0) return on_segment(v, u, w); // straight vertex, removable
        for (size_t j = 0; j < m; ++j) {
            if (j == k || j == (k + m - 1) % m || j == (k + 1) % m) continue;
            const Point p = poly[alive[j]];
            if (p == u || p == v || p == w) continue; // bridge duplicates
            const bool blocked = strict_blocking
                                     ? point_in_or_on_triangle(p, u, v, w)
                                     : (orient2d(u, v, p) > 0 && orient2d(v, w, p) > 0 &&
                                        orient2d(w, u, p) > 0);
            if (blocked) return false;
        }
        return true;
    };

    bool strict = true;
    while (alive.size() > 3) {
        bool clipped = false;
        for (size_t k = 0; k < alive.size(); ++k) {
            if (!is_ear(k, strict)) continue;
            const size_t m = alive.size();
            const uint32_t ui = alive[(k + m - 1) % m], vi = alive[k], wi = alive[(k + 1) % m];
            if (orient2d(poly[ui], poly[vi], poly[wi]) > 0)
                tris.push_back({ids[ui], ids[vi], ids[wi]});
            alive.erase(alive.begin() + k);
            clipped = true;
            break;
        }
        if (!clipped) {
            if (strict) {
                strict = false; // bridge collinearities can block every strict ear
                continue;
            }
            throw Error("ear_clip: no ear found; region too degenerate");
        }
    }
    if (alive.size() == 3 &&
        orient2d(poly[alive[0]], poly[alive[1]], poly[alive[2]]) > 0)
        tris.push_back({ids[alive[0]], ids[alive[1]], ids[alive[2]]});
    return tris;
}

// Bridge a hole into the outer ring through a mutually visible vertex pair.
// Returns the combined (weakly simple) polygon and per-vertex node ids.
void bridge_hole(const Ring& outer, const Ring& hole, std::vector<Point>& poly,
                 std::vector<uint32_t>& ids, std::vector<Point>& nodes) {
    const size_t no = outer.size(), nh = hole.size();

    auto visible = [&](Point a, Point b) {
        if (a == b) return false;
        return segment_in_closed_region(a, b, outer) && segment_avoids_open_region(a, b, hole);
    };

    // Try close pairs first.
    std::vector<std::pair<double, std::pair<size_t, size_t>>> cand;
    for (size_t i = 0; i < no; ++i)
        for (size_t j = 0; j < nh; ++j)
            cand.push_back({dist2(outer[i], hole[j]), {i, j}});
    std::sort(cand.begin(), cand.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });

    for (const auto& c : cand) {
        const size_t oi = c.second.first, hj = c.second.second;
        if (!visible(outer[oi], hole[hj])) continue;
        // outer[0..oi], hole[hj], hole[hj-1], ... (hole walked clockwise),
        // hole[hj], outer[oi], outer[oi+1..]
        poly.clear();
        ids.clear();
        auto push = [&](Point p, uint32_t id) {
            poly.push_back(p);
            ids.push_back(id);
        };
        for (size_t i = 0; i <= oi; ++i) push(outer[i], static_cast<uint32_t>(i));
        for (size_t k = 0; k < nh; ++k) {
            const size_t j = (hj + nh - k) % nh; // clockwise traversal of ccw hole
            push(hole[j], static_cast<uint32_t>(no + j));
        }
        push(hole[hj], static_cast<uint32_t>(no + hj));
        for (size_t i = oi; i < no; ++i) push(outer[i], static_cast<uint32_t>(i));
        nodes.assign(outer.begin(), outer.end());
        nodes.insert(nodes.end(), hole.begin(), hole.end());
        return;
    }
    throw Error("bridge_hole: no mutually visible vertex pair");
}

} // namespace

bool segment_avoids_open_region(Point p, Point q, const Ring& input_ring) {
    const Ring ring =
        ring_orientation(input_ring) >= 0 ? input_ring : Ring(input_ring.rbegin(), input_ring.rend());
    const size_t n = ring.size();
    const Segment s{p, q};
    if (s.degenerate()) return point_in_ring(p, ring) != Location::inside;
    const Box sb = Box::of(p, q);
    std::vector<Point> contacts;
    for (size_t i = 0; i < n; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % n];
        if (!sb.overlaps(Box::of(a, b))) continue;
        const SegX x = segment_intersect(s, Segment{a, b});
        if (x.kind == SegXKind::none) continue;
        if (x.kind == SegXKind::transverse) return false;
        if (x.kind == SegXKind::endpoint_touch) {
            contacts.push_back(x.at.rounded());
        } else {
            for (Point c : {a, b, p, q})
                if (on_segment(c, s.a, s.b) && on_segment(c, a, b)) contacts.push_back(c);
        }
    }
    if (contacts.empty()) return point_in_ring(lerp(p, q, 0.5), ring) != Location::inside;
    for (const Point c : contacts) {
        const auto ref = locate_on_ring(ring, c);
        if (!ref) continue;
        for (const Point toward : {p, q}) {
            if (c == toward) continue;
            if (direction_from_boundary(ring, *ref, c, toward) == DirClass::into_interior)
                return false;
        }
    }
    return true;
}

bool Mesh::point_in_region(Point p) const {
    if (point_in_ring(p, outer) == Location::outside) return false;
    if (hole && point_in_ring(p, *hole) == Location::inside) return false;
    return true;
}

bool Mesh::segment_in_region(Point p, Point q) const {
    if (!segment_in_closed_region(p, q, outer)) return false;
    if (hole && !segment_avoids_open_region(p, q, *hole)) return false;
    return true;
}

uint32_t Mesh::nearest_node(Point p) const {
    uint32_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (uint32_t i = 0; i < nodes.size(); ++i) {
        const double d = dist2(nodes[i], p);
        if (d < bd) {
            bd = d;
            best = i;
        }
    }
    return best;
}

std::vector<uint32_t> Mesh::nodes_within(Point p, double radius) const {
    std::vector<uint32_t> out;
    const double r2 = radius * radius;
    for (uint32_t i = 0; i < nodes.size(); ++i)
        if (dist2(nodes[i], p) <= r2) out.push_back(i);
    return out;
}

Mesh triangulate_region(const Ring& outer_in, const Ring* hole_in, double target_h,
                        int max_subdiv) {
    Mesh m;
    m.outer = ring_orientation(outer_in) >= 0 ? outer_in : Ring(outer_in.rbegin(), outer_in.rend());
    if (hole_in) {
        m.hole = ring_orientation(*hole_in) >= 0 ? *hole_in : Ring(hole_in->rbegin(), hole_in->rend());
    }

    std::vector<Point> poly;
    std::vector<uint32_t> ids;
    if (m.hole) {
        bridge_hole(m.outer, *m.hole, poly, ids, m.nodes);
    } else {
        poly = m.outer;
        m.nodes = m.outer;
        ids.resize(poly.size());
        for (uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
    }
    m.tris = ear_clip(poly, ids);

    const size_t n_outer = m.outer.size();
    const size_t n_hole = m.hole ? m.hole->size() : 0;

    // Boundary-edge map so refinement midpoints inherit boundary membership.
    std::map<std::pair<uint32_t, uint32_t>, int> boundary_edge; // 0 outer, 1 hole
    auto bkey = [](uint32_t a, uint32_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
    };
    for (uint32_t i = 0; i < n_outer; ++i)
        boundary_edge[bkey(i, (i + 1) % static_cast<uint32_t>(n_outer))] = 0;
    for (uint32_t j = 0; j < n_hole; ++j)
        boundary_edge[bkey(static_cast<uint32_t>(n_outer + j),
                           static_cast<uint32_t>(n_outer + (j + 1) % n_hole))] = 1;

    std::vector<int> node_boundary(m.nodes.size(), -1);
    for (uint32_t i = 0; i < n_outer; ++i) node_boundary[i] = 0;
    for (uint32_t j = 0; j < n_hole; ++j) node_boundary[n_outer + j] = 1;

    // 1-to-4 subdivision until every edge is <= target_h (or the cap hits).
    for (int round = 0; round < max_subdiv; ++round) {
        double worst = 0.0;
        for (const auto& t : m.tris)
            for (int e = 0; e < 3; ++e)
                worst = std::max(worst, dist(m.nodes[t[e]], m.nodes[t[(e + 1) % 3]]));
        if (worst <= target_h) break;

        std::map<std::pair<uint32_t, uint32_t>, uint32_t> midpoint;
        auto mid_node = [&](uint32_t a, uint32_t b) {
            const auto key = bkey(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const uint32_t id = static_cast<uint32_t>(m.nodes.size());
            m.nodes.push_back(lerp(m.nodes[a], m.nodes[b], 0.5));
            auto be = boundary_edge.find(key);
            node_boundary.push_back(be == boundary_edge.end() ? -1 : be->second);
            if (be != boundary_edge.end()) {
                const int which = be->second;
                boundary_edge.erase(be);
                boundary_edge[bkey(a, id)] = which;
                boundary_edge[bkey(id, b)] = which;
            }
            midpoint[key] = id;
            return id;
        };
        std::vector<std::array<uint32_t, 3>> next;
        next.reserve(m.tris.size() * 4);
        for (const auto& t : m.tris) {
            const uint32_t m01 = mid_node(t[0], t[1]);
            const uint32_t m12 = mid_node(t[1], t[2]);
            const uint32_t m20 = mid_node(t[2], t[0]);
            next.push_back({t[0], m01, m20});
            next.push_back({t[1], m12, m01});
            next.push_back({t[2], m20, m12});
            next.push_back({m01, m12, m20});
        }
        m.tris = std::move(next);
    }

    double worst = 0.0;
    m.adj.assign(m.nodes.size(), {});
    std::map<std::pair<uint32_t, uint32_t>, bool> seen;
    for (const auto& t : m.tris)
        for (int e = 0; e < 3; ++e) {
            const uint32_t a = t[e], b = t[(e + 1) % 3];
            const auto key = bkey(a, b);
            if (seen.emplace(key, true).second) {
                const double len = dist(m.nodes[a], m.nodes[b]);
                worst = std::max(worst, len);
                m.adj[a].push_back({b, len});
                m.adj[b].push_back({a, len});
            }
        }
    m.h = worst;

    for (uint32_t i = 0; i < m.nodes.size(); ++i) {
        if (node_boundary[i] == 0) m.outer_nodes.push_back(i);
        if (node_boundary[i] == 1) m.hole_nodes.push_back(i);
    }

    for (size_t i = 0; i < m.outer.size(); ++i) {
        const Point u = m.outer[(i + m.outer.size() - 1) % m.outer.size()];
        const Point v = m.outer[i], w = m.outer[(i + 1) % m.outer.size()];
        if (orient2d(u, v, w) < 0) m.pivots.push_back(v); // reflex on ccw outer
    }
    if (m.hole)
        for (size_t i = 0; i < m.hole->size(); ++i) {
            const Point u = (*m.hole)[(i + m.hole->size() - 1) % m.hole->size()];
            const Point v = (*m.hole)[i], w = (*m.hole)[(i + 1) % m.hole->size()];
            if (orient2d(u, v, w) > 0) m.pivots.push_back(v); // convex hole corner
        }
    return m;
}

DijkstraResult dijkstra_multi(const Mesh& m, const std::vector<uint32_t>& srcs) {
    DijkstraResult r;
    r.dist.assign(m.nodes.size(), std::numeric_limits<double>::infinity());
    r.parent.assign(m.nodes.size(), -1);
    using QE = std::pair<double, uint32_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    for (uint32_t s : srcs) {
        r.dist[s] = 0.0;
        pq.push({0.0, s});
    }
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d > r.dist[u]) continue;
        for (const auto& [v, w] : m.adj[u]) {
            const double nd = d + w;
            if (nd < r.dist[v]) {
                r.dist[v] = nd;
                r.parent[v] = static_cast<int32_t>(u);
                pq.push({nd, v});
            }
        }
    }
    return r;
}

DijkstraResult dijkstra(const Mesh& m, uint32_t src) { return dijkstra_multi(m, {src}); }

std::vector<uint32_t> extract_path(const DijkstraResult& d, uint32_t dst) {
    std::vector<uint32_t> path;
    int32_t cur = static_cast<int32_t>(dst);
    while (cur >= 0) {
        path.push_back(static_cast<uint32_t>(cur));
        cur = d.parent[cur];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

std::vector<Point> greedy_shortcut(const Mesh& m, const std::vector<Point>& path) {
    std::vector<Point> out;
    out.push_back(path.front());
    size_t i = 0;
    while (i + 1 < path.size()) {
        size_t j = path.size() - 1;
        while (j > i + 1 && !m.segment_in_region(path[i], path[j])) --j;
        out.push_back(path[j]);
        i = j;
    }
    return out;
}

// Snap interior path vertices onto nearby blocking corners when that
// shortens the path; a taut path only bends at pivots.
bool snap_to_pivots(const Mesh& m, std::vector<Point>& path) {
    bool improved = false;
    for (size_t k = 1; k + 1 < path.size(); ++k) {
        const Point a = path[k - 1], b = path[k], c = path[k + 1];
        const double cur = dist(a, b) + dist(b, c);
        Point best = b;
        double best_len = cur - 1e-13;
        for (const Point v : m.pivots) {
            if (v == b) continue;
            const double cand = dist(a, v) + dist(v, c);
            if (cand < best_len && m.segment_in_region(a, v) && m.segment_in_region(v, c)) {
                best = v;
                best_len = cand;
            }
        }
        if (best != b) {
            path[k] = best;
            improved = true;
        }
    }
    return improved;
}

} // namespace

std::vector<Point> shortcut_path(const Mesh& m, std::vector<Point> path) {
    if (path.size() < 3) return path;
    path = greedy_shortcut(m, path);
    for (int round = 0; round < 8 && path.size() >= 3; ++round) {
        if (!snap_to_pivots(m, path)) break;
        path = greedy_shortcut(m, path);
    }
    return path;
}

} // namespace loopforge::geom
