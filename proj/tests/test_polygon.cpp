#include <doctest.h>

#include "loopforge/error.hpp"
#include "loopforge/geom/hausdorff.hpp"
#include "loopforge/geom/polygon.hpp"
#include "support/oracles.hpp"
#include "support/shapes.hpp"

using namespace loopforge;
using namespace loopforge::geom;

TEST_CASE("point_in_ring: unit square cases") {
    const Ring sq = shapes::square(0, 0, 0.5);
    CHECK(point_in_ring({0, 0}, sq) == Location::inside);
    CHECK(point_in_ring({0.5, 0.5}, sq) == Location::boundary);
    CHECK(point_in_ring({2, 0}, sq) == Location::outside);
    CHECK(point_in_ring({0.5, 0.0}, sq) == Location::boundary);
}

TEST_CASE("point_in_ring agrees with rational ray casting on random points") {
    oracles::Rng rng(5);
    const std::vector<Ring> polys = {
        shapes::square(0, 0, 1),
        shapes::circle(0.2, -0.1, 1.3, 48),
        shapes::wavy(0, 0, 1, 0.35, 7),
        // L-shape with a reflex vertex
        Ring{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}},
    };
    for (const Ring& poly : polys) {
        for (int k = 0; k < 10000; ++k) {
            Point p{rng.uniform(-2.2, 2.6), rng.uniform(-2.2, 2.6)};
            if (k % 7 == 0) { // exact boundary hits
                const size_t e = static_cast<size_t>(rng.uniform_int(0, static_cast<int>(poly.size()) - 1));
                p = poly[e];
            } else if (k % 7 == 1) {
                const size_t e = static_cast<size_t>(rng.uniform_int(0, static_cast<int>(poly.size()) - 1));
                p = lerp(poly[e], poly[(e + 1) % poly.size()], 0.5);
            }
            const Location got = point_in_ring(p, poly);
            const oracles::Loc want = oracles::point_in_polygon_rational(p, poly);
            REQUIRE(static_cast<int>(got) == static_cast<int>(want));
        }
    }
}

TEST_CASE("ring_orientation and winding") {
    Ring sq = shapes::square(0, 0, 1);
    CHECK(ring_orientation(sq) == 1);
    std::reverse(sq.begin(), sq.end());
    CHECK(ring_orientation(sq) == -1);
    CHECK(winding_number(shapes::circle(0, 0, 1, 32), {0.1, 0.2}) == 1);
    Ring cw = shapes::circle(0, 0, 1, 32);
    std::reverse(cw.begin(), cw.end());
    CHECK(winding_number(cw, {0.1, 0.2}) == -1);
    CHECK(winding_number(cw, {5, 5}) == 0);
}

TEST_CASE("simplicity: square ok, bowtie violates, spikes rejected") {
    CHECK(!find_simplicity_violation(shapes::square(0, 0, 1)));
    CHECK(!find_simplicity_violation(shapes::circle(0, 0, 1, 64)));
    const Ring bowtie{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
    const auto v = find_simplicity_violation(bowtie);
    REQUIRE(v.has_value());
    CHECK(v->edge1 == 0);
    CHECK(v->edge2 == 2);
    CHECK_THROWS_AS((void)find_simplicity_violation(Ring{{0, 0}, {0, 0}, {1, 1}}),
                    PreconditionError);
    // touching (not crossing) is still a violation for strict simplicity
    const Ring pinched{{0, 0}, {2, 0}, {2, 2}, {1, 0.0}, {0, 2}};
    CHECK(find_simplicity_violation(pinched).has_value());
}

TEST_CASE("weak simplicity admits doubled spikes") {
    // square with a doubled antenna on the top edge
    const Ring r{{0, 0}, {2, 0}, {2, 2}, {1.5, 2}, {1.5, 3}, {1.2, 3.5},
                 {1.5, 3}, {1.5, 2}, {0, 2}};
    CHECK(is_weakly_simple(r));
    double removed = 0.0;
    const Ring stripped = strip_doubled_spikes(r, &removed);
    CHECK(stripped.size() == 5);
    CHECK(removed > 2.9);
    CHECK(!find_simplicity_violation(stripped));
    CHECK(!is_weakly_simple(Ring{{0, 0}, {2, 2}, {2, 0}, {0, 2}})); // bowtie stays bad
}

TEST_CASE("interior point") {
    for (const Ring& poly :
         {shapes::square(0, 0, 1), shapes::wavy(1, 2, 1, 0.4, 5),
          Ring{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}) {
        CHECK(point_in_ring(interior_point_of_ring(poly), poly) == Location::inside);
    }
}

TEST_CASE("direction_from_boundary wedge tests") {
    const Ring sq = shapes::square(0, 0, 1); // ccw
    // edge-interior point on the bottom edge
    const auto ref = locate_on_ring(sq, {0, -1});
    REQUIRE(ref.has_value());
    CHECK(!ref->at_vertex);
    CHECK(direction_from_boundary(sq, *ref, {0, -1}, {0, 0}) == DirClass::into_interior);
    CHECK(direction_from_boundary(sq, *ref, {0, -1}, {0, -2}) == DirClass::into_exterior);
    CHECK(direction_from_boundary(sq, *ref, {0, -1}, {0.5, -1}) == DirClass::along_boundary);
    // convex corner
    const auto cr = locate_on_ring(sq, {1, -1});
    REQUIRE(cr.has_value());
    CHECK(cr->at_vertex);
    CHECK(direction_from_boundary(sq, *cr, {1, -1}, {0.5, -0.5}) == DirClass::into_interior);
    CHECK(direction_from_boundary(sq, *cr, {1, -1}, {2, -1.5}) == DirClass::into_exterior);
    CHECK(direction_from_boundary(sq, *cr, {1, -1}, {1, 0}) == DirClass::along_boundary);
    // reflex corner of an L
    const Ring L{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    const auto rr = locate_on_ring(L, {1, 1});
    REQUIRE(rr.has_value());
    CHECK(direction_from_boundary(L, *rr, {1, 1}, {0.5, 0.5}) == DirClass::into_interior);
    CHECK(direction_from_boundary(L, *rr, {1, 1}, {1.5, 1.5}) == DirClass::into_exterior);
    CHECK(direction_from_boundary(L, *rr, {1, 1}, {0.5, 1.5}) == DirClass::into_interior);
}

TEST_CASE("image_in_closed_disc: nested, touching, crossing") {
    const Ring big = shapes::circle(0, 0, 2, 48);
    const Ring small = shapes::circle(0, 0, 1, 48);
    CHECK(image_in_closed_disc(small, big).contained);
    CHECK(!image_in_closed_disc(big, small).contained);

    // shared-arc containment: inner square shares the bottom edge of outer
    const Ring outer = shapes::rect(0, 0, 4, 4);
    const Ring inner{{1, 0}, {3, 0}, {3, 2}, {1, 2}};
    const auto r = image_in_closed_disc(inner, outer);
    CHECK(r.contained);
    CHECK(r.touching);

    // crossing detection
    const Ring shifted = shapes::circle(1.5, 0, 1, 48);
    CHECK(!image_in_closed_disc(shifted, small).contained);

    // identical rings are mutually contained
    CHECK(image_in_closed_disc(big, big).contained);

    // touching from outside is not containment
    const Ring beside{{4, 0}, {6, 0}, {6, 2}, {4, 2}};
    CHECK(!image_in_closed_disc(beside, outer).contained);
}

TEST_CASE("segment_in_closed_region") {
    const Ring L{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    CHECK(segment_in_closed_region({0.2, 0.2}, {1.8, 0.8}, L));
    CHECK(!segment_in_closed_region({0.5, 1.5}, {1.8, 0.8}, L)); // cuts the notch
    CHECK(segment_in_closed_region({0, 0}, {2, 0}, L));          // along the boundary
    CHECK(segment_in_closed_region({0.5, 1.5}, {1, 1}, L));      // ends at reflex corner
    CHECK(!segment_in_closed_region({3, 3}, {4, 4}, L));
}

TEST_CASE("hausdorff_gap examples") {
    const Ring a = shapes::circle(0, 0, 1.0, 64);
    CHECK(hausdorff_gap(a, a) == 0.0);
    const Ring b = shapes::circle(0, 0, 1.1, 64);
    CHECK(hausdorff_gap(a, b) == doctest::Approx(0.1).epsilon(0.01));
    const Ring s1{{0, 0}, {1, 0}, {0.5, 1e-9}};
    const Ring s2{{0, 0.3}, {1, 0.3}, {0.5, 0.3 + 1e-9}};
    CHECK(hausdorff_gap(s1, s2) == doctest::Approx(0.3).epsilon(1e-6));
}
