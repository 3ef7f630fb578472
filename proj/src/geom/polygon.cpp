#include "loopforge/geom/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "loopforge/error.hpp"
#include "loopforge/geom/kernels.hpp"

namespace loopforge::geom {

namespace {

inline Point vtx(const Ring& r, size_t i) { return r[i % r.size()]; }

} // namespace

double ring_length(const Ring& ring) {
    double len = 0.0;
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) len += dist(ring[i], ring[(i + 1) % n]);
    return len;
}

Box ring_bbox(const Ring& ring) { return Box::of(ring); }

double ring_signed_area2(const Ring& ring) {
    double s = 0.0;
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) s += cross(ring[i], ring[(i + 1) % n]);
    return s;
}

int ring_orientation(const Ring& ring) {
    const size_t n = ring.size();
    double s = 0.0, abs_s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double t = cross(ring[i], ring[(i + 1) % n]);
        s += t;
        abs_s += std::abs(t);
    }
    // Loose filter; the shoelace sum of n rounded terms is accurate to a few
    // n*eps*abs_s, so anything comfortably above that has a certain sign.
    const double eps = std::numeric_limits<double>::epsilon();
    if (std::abs(s) > 8.0 * static_cast<double>(n) * eps * abs_s)
        return s > 0.0 ? 1 : -1;
    Rational rs = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point p = ring[i], q = ring[(i + 1) % n];
        rs += Rational(p.x) * Rational(q.y) - Rational(p.y) * Rational(q.x);
    }
    return rs.sign();
}

Location point_in_ring(Point p, const Ring& ring) {
    const size_t n = ring.size();
    const Box bb = ring_bbox(ring);
    if (p.x < bb.xmin || p.x > bb.xmax || p.y < bb.ymin || p.y > bb.ymax)
        return Location::outside;
    for (size_t i = 0; i < n; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % n];
        if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x) ||
            p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y))
            continue;
        if (on_segment(p, a, b)) return Location::boundary;
    }
    bool odd = false;
    for (size_t i = 0; i < n; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % n];
        if ((a.y > p.y) == (b.y > p.y)) continue;
        const int o = orient2d(a, b, p);
        if (b.y > a.y ? o > 0 : o < 0) odd = !odd;
    }
    return odd ? Location::inside : Location::outside;
}

int winding_number(const Ring& ring, Point p) {
    int w = 0;
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient2d(a, b, p) > 0) ++w;
        } else {
            if (b.y <= p.y && orient2d(a, b, p) < 0) --w;
        }
    }
    return w;
}

void for_each_overlapping_edge_pair(const Ring& a, const Ring& b,
                                    const std::function<void(size_t, size_t)>& fn) {
    const bool self = &a == &b;
    const size_t na = a.size(), nb = b.size();

    struct Ev {
        double x;
        bool open;
        uint32_t id; // low bit: 0 = from a, 1 = from b
    };
    std::vector<Ev> evs;
    evs.reserve(2 * (na + (self ? 0 : nb)));
    auto edge_box = [](const Ring& r, size_t i) {
        return Box::of(r[i], r[(i + 1) % r.size()]);
    };
    for (size_t i = 0; i < na; ++i) {
        const Box bx = edge_box(a, i);
        evs.push_back({bx.xmin, true, static_cast<uint32_t>(i << 1)});
        evs.push_back({bx.xmax, false, static_cast<uint32_t>(i << 1)});
    }
    if (!self)
        for (size_t j = 0; j < nb; ++j) {
            const Box bx = edge_box(b, j);
            evs.push_back({bx.xmin, true, static_cast<uint32_t>(j << 1 | 1)});
            evs.push_back({bx.xmax, false, static_cast<uint32_t>(j << 1 | 1)});
        }
    std::sort(evs.begin(), evs.end(), [](const Ev& l, const Ev& r) {
        return l.x < r.x || (l.x == r.x && l.open > r.open);
    });

    std::vector<uint32_t> active;
    for (const Ev& e : evs) {
        if (!e.open) {
            active.erase(std::find(active.begin(), active.end(), e.id));
            continue;
        }
        const bool e_from_b = e.id & 1;
        const size_t ei = e.id >> 1;
        const Box ebx = e_from_b ? edge_box(b, ei) : edge_box(a, ei);
        for (uint32_t oid : active) {
            const bool o_from_b = oid & 1;
            const size_t oi = oid >> 1;
            if (self) {
                const Box obx = edge_box(a, oi);
                if (!ebx.overlaps(obx)) continue;
                fn(std::min(ei, oi), std::max(ei, oi));
            } else {
                if (e_from_b == o_from_b) continue;
                const Box obx = o_from_b ? edge_box(b, oi) : edge_box(a, oi);
                if (!ebx.overlaps(obx)) continue;
                if (e_from_b)
                    fn(oi, ei);
                else
                    fn(ei, oi);
            }
        }
        active.push_back(e.id);
    }
}

std::optional<SimplicityViolation> find_simplicity_violation(const Ring& ring) {
    const size_t n = ring.size();
    if (n < 3) throw PreconditionError("ring needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i)
        if (ring[i] == ring[(i + 1) % n])
            throw PreconditionError("degenerate ring: repeated consecutive vertices");

    std::optional<SimplicityViolation> hit;
    for_each_overlapping_edge_pair(ring, ring, [&](size_t i, size_t j) {
        if (hit) return;
        const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        const Segment si{ring[i], ring[(i + 1) % n]};
        const Segment sj{ring[j], ring[(j + 1) % n]};
        const SegX x = segment_intersect(si, sj);
        if (x.kind == SegXKind::none) return;
        if (!adjacent) {
            hit = SimplicityViolation{i, j};
            return;
        }
        const Point shared = (j == i + 1) ? ring[j] : ring[0];
        if (x.kind != SegXKind::endpoint_touch || x.at.rounded() != shared)
            hit = SimplicityViolation{i, j};
    });
    return hit;
}

Ring strip_doubled_spikes(const Ring& ring, double* out_spike_len) {
    Ring r = ring;
    double removed = 0.0;
    bool changed = true;
    while (changed && r.size() >= 2) {
        changed = false;
        const size_t n = r.size();
        for (size_t i = 0; i < n; ++i) {
            const size_t prev = (i + n - 1) % n, next = (i + 1) % n;
            if (r[prev] == r[next] && n >= 3) {
                removed += dist(r[prev], r[i]) + dist(r[i], r[next]);
                // erase tip i and the duplicate at next
                if (next > i) {
                    r.erase(r.begin() + next);
                    r.erase(r.begin() + i);
                } else {
                    r.erase(r.begin() + i);
                    r.erase(r.begin() + next);
                }
                changed = true;
                break;
            }
            if (r[i] == r[next]) {
                r.erase(r.begin() + next);
                changed = true;
                break;
            }
        }
    }
    if (out_spike_len) *out_spike_len += removed;
    return r;
}

bool is_weakly_simple(const Ring& ring) {
    const Ring stripped = strip_doubled_spikes(ring);
    if (stripped.size() < 3) return true; // fully collapsed doubled path
    try {
        return !find_simplicity_violation(stripped).has_value();
    } catch (const PreconditionError&) {
        return false;
    }
}

Point interior_point_of_ring(const Ring& ring) {
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Point u = vtx(ring, i + n - 1), v = ring[i], w = vtx(ring, i + 1);
        const Point cand{(u.x + v.x + w.x) / 3.0, (u.y + v.y + w.y) / 3.0};
        if (point_in_ring(cand, ring) == Location::inside) return cand;
        const Point mid{(u.x + w.x) / 2.0, (u.y + w.y) / 2.0};
        if (point_in_ring(mid, ring) == Location::inside) return mid;
    }
    // Shrink toward an ear more aggressively.
    for (size_t i = 0; i < n; ++i) {
        const Point u = vtx(ring, i + n - 1), v = ring[i], w = vtx(ring, i + 1);
        for (double t : {0.9, 0.99, 0.999, 0.9999}) {
            const Point m{(u.x + w.x) / 2.0, (u.y + w.y) / 2.0};
            const Point cand = lerp(m, v, t);
            if (point_in_ring(cand, ring) == Location::inside) return cand;
        }
    }
    throw Error("interior_point_of_ring: no interior point found (degenerate ring?)");
}

std::optional<BoundaryRef> locate_on_ring(const Ring& ring, Point p) {
    const size_t n = ring.size();
    for (size_t i = 0; i < n; ++i)
        if (ring[i] == p) return BoundaryRef{i, true};
    for (size_t i = 0; i < n; ++i) {
        const Point a = ring[i], b = ring[(i + 1) % n];
        if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x) ||
            p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y))
            continue;
        if (on_segment(p, a, b)) return BoundaryRef{i, false};
    }
    return std::nullopt;
}

DirClass direction_from_boundary(const Ring& ring, const BoundaryRef& where, Point from,
                                 Point toward) {
    if (from == toward) return DirClass::along_boundary;
    const size_t n = ring.size();
    if (!where.at_vertex) {
        const Point a = ring[where.edge], b = ring[(where.edge + 1) % n];
        const int o = orient2d(a, b, toward);
        if (o == 0) return DirClass::along_boundary;
        return o > 0 ? DirClass::into_interior : DirClass::into_exterior;
    }
    const Point v = ring[where.edge];
    const Point u = ring[(where.edge + n - 1) % n];
    const Point w = ring[(where.edge + 1) % n];
    const int o_in = orient2d(u, v, toward);  // left of incoming edge u->v
    const int o_out = orient2d(v, w, toward); // left of outgoing edge v->w
    if (o_out == 0 && dot(toward - v, w - v) > 0) return DirClass::along_boundary;
    if (o_in == 0 && dot(toward - v, u - v) > 0) return DirClass::along_boundary;
    const int turn = orient2d(u, v, w);
    bool interior;
    if (turn > 0)
        interior = o_in > 0 && o_out > 0;
    else if (turn < 0)
        interior = o_in > 0 || o_out > 0;
    else
        interior = o_in > 0;
    return interior ? DirClass::into_interior : DirClass::into_exterior;
}

ContainmentResult image_in_closed_disc(const Ring& b, const Ring& a) {
    ContainmentResult res;
    const Ring a_ccw = ring_orientation(a) >= 0 ? a : Ring(a.rbegin(), a.rend());
    const size_t na = a_ccw.size(), nb = b.size();

    bool crossing = false;
    Point cross_at{};
    std::vector<std::pair<size_t, Point>> a_vertex_on_b_edge; // (b edge, a vertex)
    bool any_contact = false;

    for_each_overlapping_edge_pair(b, a_ccw, [&](size_t bi, size_t ai) {
        if (crossing) return;
        const Segment sb{b[bi], b[(bi + 1) % nb]};
        const Segment sa{a_ccw[ai], a_ccw[(ai + 1) % na]};
        const SegX x = segment_intersect(sb, sa);
        if (x.kind == SegXKind::none) return;
        any_contact = true;
        if (x.kind == SegXKind::transverse) {
            crossing = true;
            cross_at = x.at.rounded();
            return;
        }
        if (x.kind == SegXKind::endpoint_touch) {
            const Point at = x.at.rounded();
            // An a-vertex strictly inside a b-edge needs a pass-through test.
            if (at != sb.a && at != sb.b && (at == sa.a || at == sa.b))
                a_vertex_on_b_edge.emplace_back(bi, at);
        }
    });
    if (crossing) {
        res.contained = false;
        res.witness = cross_at;
        res.why = "proper boundary crossing";
        return res;
    }

    // Fast path: vertices of b that coincide with vertices of a are boundary
    // contacts; classify the rest with the exact point test.
    for (size_t i = 0; i < nb; ++i) {
        const Point p = b[i];
        const auto loc_ref = locate_on_ring(a_ccw, p);
        if (!loc_ref) {
            if (point_in_ring(p, a_ccw) == Location::outside) {
                res.contained = false;
                res.witness = p;
                res.why = "vertex strictly outside";
                return res;
            }
            continue;
        }
        any_contact = true;
        for (const Point q : {b[(i + 1) % nb], b[(i + nb - 1) % nb]}) {
            if (direction_from_boundary(a_ccw, *loc_ref, p, q) == DirClass::into_exterior) {
                res.contained = false;
                res.witness = p;
                res.why = "edge leaves the disc at a boundary vertex";
                return res;
            }
        }
    }

    for (const auto& [bi, av] : a_vertex_on_b_edge) {
        const auto loc_ref = locate_on_ring(a_ccw, av);
        if (!loc_ref) continue;
        for (const Point q : {b[bi], b[(bi + 1) % nb]}) {
            if (direction_from_boundary(a_ccw, *loc_ref, av, q) == DirClass::into_exterior) {
                res.contained = false;
                res.witness = av;
                res.why = "edge passes through a boundary vertex to the outside";
                return res;
            }
        }
    }

    res.contained = true;
    res.touching = any_contact;
    return res;
}

bool segment_in_closed_region(Point p, Point q, const Ring& input_ring) {
    const Ring ring =
        ring_orientation(input_ring) >= 0 ? input_ring : Ring(input_ring.rbegin(), input_ring.rend());
    const size_t n = ring.size();
    const Segment s{p, q};
    if (s.degenerate()) return point_in_ring(p, ring) != Location::outside;
    const Box sb = Box::of(p, q);
    std::vector<Point> contacts;
    for (size_t i = 0; i < n; ++i) {
        const Point a = ring[i], bpt = ring[(i + 1) % n];
        if (!sb.overlaps(Box::of(a, bpt))) continue;
        const SegX x = segment_intersect(s, Segment{a, bpt});
        if (x.kind == SegXKind::none) continue;
        if (x.kind == SegXKind::transverse) return false;
        if (x.kind == SegXKind::endpoint_touch) {
            contacts.push_back(x.at.rounded());
        } else { // overlap: both shared-interval ends are contacts
            for (Point c : {a, bpt, p, q})
                if (on_segment(c, s.a, s.b) && on_segment(c, a, bpt)) contacts.push_back(c);
        }
    }
    if (contacts.empty())
        return point_in_ring(lerp(p, q, 0.5), ring) != Location::outside;
    std::sort(contacts.begin(), contacts.end(),
              [](Point l, Point r) { return l.x < r.x || (l.x == r.x && l.y < r.y); });
    contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());
    for (const Point c : contacts) {
        const auto ref = locate_on_ring(ring, c);
        if (!ref) continue;
        for (const Point toward : {p, q}) {
            if (c == toward) continue;
            if (direction_from_boundary(ring, *ref, c, toward) == DirClass::into_exterior)
                return false;
        }
    }
    return true;
}

} // namespace loopforge::geom
