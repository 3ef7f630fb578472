#include <doctest.h>

#include "loopforge/geom/exact.hpp"
#include "support/oracles.hpp"

using namespace loopforge::geom;

TEST_CASE("orient2d: textbook cases") {
    CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient2d({0, 0}, {1, 0}, {2, 0}) == 0);
    CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient2d: antisymmetric under swapping any two arguments") {
    oracles::Rng rng(42);
    for (int k = 0; k < 500; ++k) {
        const Point a{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const Point b{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const Point c{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const int o = orient2d(a, b, c);
        CHECK(orient2d(b, a, c) == -o);
        CHECK(orient2d(a, c, b) == -o);
        CHECK(orient2d(c, b, a) == -o);
    }
}

TEST_CASE("orient2d: near-degenerate cases agree with rational arithmetic") {
    oracles::Rng rng(7);
    int exercised_zero = 0;
    auto snap = [](double v) { return std::round(v * 1024.0) / 1024.0; };
    for (int k = 0; k < 5000; ++k) {
        const Point a{snap(rng.uniform(-1, 1)), snap(rng.uniform(-1, 1))};
        const Point b{snap(rng.uniform(-1, 1)), snap(rng.uniform(-1, 1))};
        // dyadic coordinates with a quarter-integer multiplier keep half of
        // the cases exactly collinear; the rest are an ulp or so off
        const double t = rng.uniform_int(-8, 8) / 4.0;
        Point c{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        if (k % 2) {
            c.x += rng.uniform(-1, 1) * 1e-16;
            c.y += rng.uniform(-1, 1) * 1e-16;
        }
        const int got = orient2d(a, b, c);
        const int want = oracles::orient2d_rational(a, b, c);
        REQUIRE(got == want);
        if (want == 0) ++exercised_zero;
    }
    CHECK(exercised_zero > 500); // the suite actually hits degenerate inputs
}

TEST_CASE("segment_intersect: classification examples") {
    const SegX x1 = segment_intersect({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}});
    CHECK(x1.kind == SegXKind::transverse);
    CHECK(x1.at.rounded() == Point{1, 0});

    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}).kind == SegXKind::none);
    CHECK(segment_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}).kind == SegXKind::overlap);
    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}).kind == SegXKind::endpoint_touch);
    CHECK(segment_intersect({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}).kind == SegXKind::endpoint_touch);
}

TEST_CASE("segment_intersect: randomized agreement with the rational oracle") {
    oracles::Rng rng(99);
    auto snap = [&](double v) { return std::round(v * 8) / 8; }; // exact eighths
    for (int k = 0; k < 3000; ++k) {
        // snapped coordinates produce plenty of touches, overlaps, and
        // shared endpoints
        const Segment s1{{snap(rng.uniform(-2, 2)), snap(rng.uniform(-2, 2))},
                         {snap(rng.uniform(-2, 2)), snap(rng.uniform(-2, 2))}};
        const Segment s2{{snap(rng.uniform(-2, 2)), snap(rng.uniform(-2, 2))},
                         {snap(rng.uniform(-2, 2)), snap(rng.uniform(-2, 2))}};
        if (s1.degenerate() || s2.degenerate()) continue;
        const SegX got = segment_intersect(s1, s2);
        const oracles::SegResult want = oracles::segment_intersect_rational(s1, s2);
        REQUIRE(static_cast<int>(got.kind) == static_cast<int>(want.kind));
        if (want.kind == oracles::SegKind::transverse) {
            REQUIRE(got.at.x == want.x);
            REQUIRE(got.at.y == want.y);
        }
    }
}

TEST_CASE("on_segment endpoints and interior") {
    CHECK(on_segment({1, 1}, {0, 0}, {2, 2}));
    CHECK(on_segment({0, 0}, {0, 0}, {2, 2}));
    CHECK(!on_segment({1, 1.0000000001}, {0, 0}, {2, 2}));
    CHECK(!on_segment({3, 3}, {0, 0}, {2, 2}));
}
