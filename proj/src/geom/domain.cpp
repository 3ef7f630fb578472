#include "loopforge/geom/domain.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "loopforge/error.hpp"

namespace loopforge::geom {

PolyDomain make_domain(Ring boundary, double mesh_h, bool with_diameter) {
    if (ring_orientation(boundary) < 0) std::reverse(boundary.begin(), boundary.end());
    if (find_simplicity_violation(boundary))
        throw PreconditionError("domain boundary must be a simple polygon");
    PolyDomain dom;
    dom.boundary = std::move(boundary);
    dom.mesh_h = mesh_h;
    dom.mesh = std::make_shared<Mesh>(triangulate_region(dom.boundary, nullptr, mesh_h));
    if (with_diameter) {
        dom.diameter_d = domain_diameter(dom);
        dom.diameter_sampling = dom.mesh->h;
    }
    return dom;
}

namespace {

// Temporarily attaches p to the mesh graph: edges to every node in a local
// ball whose connecting segment stays inside the region.
struct Attached {
    std::vector<std::pair<uint32_t, double>> edges;
};

Attached attach(const Mesh& m, Point p) {
    Attached a;
    double radius = std::max(m.h * 2.0, 1e-12);
    for (int tries = 0; tries < 8 && a.edges.empty(); ++tries, radius *= 2.0) {
        for (uint32_t id : m.nodes_within(p, radius)) {
            if (m.nodes[id] == p || m.segment_in_region(p, m.nodes[id]))
                a.edges.push_back({id, dist(p, m.nodes[id])});
        }
    }
    if (a.edges.empty()) throw Error("geodesic: cannot attach point to mesh");
    return a;
}

} // namespace

GeodesicPath geodesic(const PolyDomain& dom, Point p, Point q) {
    if (!dom.contains(p) || !dom.contains(q))
        throw PreconditionError("geodesic: point outside the domain");
    GeodesicPath out;
    if (p == q) {
        out.path = {p, q};
        return out;
    }
    const Mesh& m = *dom.mesh;
    if (m.segment_in_region(p, q)) { // direct visibility, exact
        out.path = {p, q};
        out.length = dist(p, q);
        out.tol = 0.0;
        return out;
    }
    const Attached ap = attach(m, p);
    const Attached aq = attach(m, q);

    // Dijkstra from p's attachment set, seeded with the attachment lengths.
    DijkstraResult r;
    r.dist.assign(m.nodes.size(), std::numeric_limits<double>::infinity());
    r.parent.assign(m.nodes.size(), -1);
    using QE = std::pair<double, uint32_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    for (const auto& [id, w] : ap.edges) {
        if (w < r.dist[id]) {
            r.dist[id] = w;
            pq.push({w, id});
        }
    }
    while (!pq.empty()) {
        const auto [d, u] = pq.top();
        pq.pop();
        if (d > r.dist[u]) continue;
        for (const auto& [v, w] : m.adj[u]) {
            if (d + w < r.dist[v]) {
                r.dist[v] = d + w;
                r.parent[v] = static_cast<int32_t>(u);
                pq.push({d + w, v});
            }
        }
    }

    double best = std::numeric_limits<double>::infinity();
    uint32_t best_exit = 0;
    for (const auto& [id, w] : aq.edges) {
        if (r.dist[id] + w < best) {
            best = r.dist[id] + w;
            best_exit = id;
        }
    }
    if (!std::isfinite(best)) throw Error("geodesic: endpoints not connected in mesh");

    std::vector<Point> path;
    path.push_back(p);
    std::vector<uint32_t> chain = extract_path(r, best_exit);
    for (uint32_t id : chain) path.push_back(m.nodes[id]);
    path.push_back(q);
    out.tol = m.h * static_cast<double>(path.size());
    path = shortcut_path(m, std::move(path));
    out.path = std::move(path);
    out.length = polyline_length(out.path);
    return out;
}

double geodesic_distance(const PolyDomain& dom, Point p, Point q) {
    return geodesic(dom, p, q).length;
}

double domain_diameter(const PolyDomain& dom) {
    const Mesh& m = *dom.mesh;
    // Per boundary source, remember the farthest node over the graph metric
    // (which overestimates each pair), then straighten the candidate paths
    // and report the largest straightened length.
    struct Cand {
        double graph_dist;
        uint32_t src, dst;
    };
    std::vector<Cand> cands;
    for (uint32_t src : m.outer_nodes) {
        double d = 0.0;
        uint32_t arg = src;
        const DijkstraResult r = dijkstra(m, src);
        for (uint32_t v = 0; v < m.nodes.size(); ++v) {
            if (std::isfinite(r.dist[v]) && r.dist[v] > d) {
                d = r.dist[v];
                arg = v;
            }
        }
        cands.push_back({d, src, arg});
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.graph_dist > b.graph_dist; });
    if (cands.size() > 16) cands.resize(16);

    double best = 0.0;
    for (const Cand& c : cands) {
        const DijkstraResult r = dijkstra(m, c.src);
        std::vector<Point> path;
        for (uint32_t id : extract_path(r, c.dst)) path.push_back(m.nodes[id]);
        if (path.size() < 2) continue;
        path = shortcut_path(m, std::move(path));
        best = std::max(best, polyline_length(path));
    }
    return best;
}

} // namespace loopforge::geom
