#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bda/error.hpp"
#include "bda/geom.hpp"
#include "test_support.hpp"

using namespace bda;
using geom::Footprint;
using geom::GeoPoint;
using geom::Ring;

namespace {

Footprint unit_square() { return Footprint("sq", geom::rectangle(0, 0, 1, 1)); }

Footprint square_with_hole() {
    return Footprint("holed", geom::rectangle(0, 0, 1, 1), {geom::rectangle(0.25, 0.25, 0.75, 0.75)});
}

Footprint translated(const Footprint& fp, double dx, double dy) {
    auto shift = [&](const Ring& r) {
        std::vector<GeoPoint> v;
        for (const auto& p : r.vertices()) v.push_back({p.lon + dx, p.lat + dy});
        return Ring(std::move(v));
    };
    std::vector<Ring> holes;
    for (const auto& h : fp.holes()) holes.push_back(shift(h));
    return Footprint(fp.id(), shift(fp.exterior()), std::move(holes));
}

// Counter-clockwise convex polygon: inside iff left of (or on) every edge.
bool convex_oracle(const Ring& ring, const GeoPoint& p) {
    const auto v = ring.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double cross = (v[i].lon - v[i - 1].lon) * (p.lat - v[i - 1].lat) -
                             (v[i].lat - v[i - 1].lat) * (p.lon - v[i - 1].lon);
        if (cross < 0.0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("contains: interior, exterior and hole") {
    CHECK(geom::contains(unit_square(), {0.5, 0.5}));
    CHECK_FALSE(geom::contains(unit_square(), {2.0, 0.5}));
    CHECK_FALSE(geom::contains(square_with_hole(), {0.5, 0.5}));
    CHECK(geom::contains(square_with_hole(), {0.1, 0.5}));
}

TEST_CASE("contains: boundary counts as inside") {
    const auto sq = unit_square();
    CHECK(geom::contains(sq, {1.0, 0.5}));
    CHECK(geom::contains(sq, {0.0, 0.0}));
    CHECK(geom::contains(sq, {0.5, 1.0}));
    // hole boundary belongs to the footprint as well
    CHECK(geom::contains(square_with_hole(), {0.25, 0.5}));
    CHECK_FALSE(geom::contains(sq, {1.0 + 1e-12, 0.5}));
}

TEST_CASE("contains: L-shaped concave polygon") {
    const Footprint l("L", Ring({{0, 0}, {10, 0}, {10, 5}, {5, 5}, {5, 10}, {0, 10}, {0, 0}}));
    CHECK(geom::contains(l, {7, 2}));
    CHECK(geom::contains(l, {2, 7}));
    CHECK_FALSE(geom::contains(l, {7, 7}));
    const auto b = geom::bbox(l);
    CHECK(b == geom::BBox{0, 0, 10, 10});
}

TEST_CASE("contains agrees with the cross-product oracle on a convex polygon") {
    testing::Gen g(7);
    const Ring hexagon({{0, 0}, {2, -1}, {4, 0}, {4, 2}, {2, 3}, {0, 2}, {0, 0}});
    const Footprint fp("hex", hexagon);
    for (int i = 0; i < 1000; ++i) {
        const GeoPoint p{g.uniform(-1, 5), g.uniform(-2, 4)};
        CHECK(geom::contains(fp, p) == convex_oracle(hexagon, p));
    }
}

TEST_CASE("contains is translation-equivariant") {
    testing::Gen g(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Footprint fp("s", testing::random_star(g, 0.0, 0.0, 0.5, 2.0, g.integer(3, 12)));
        // Offsets are dyadic so shifted coordinates stay exact.
        const double dx = g.integer(-64, 64) * 0.25;
        const double dy = g.integer(-64, 64) * 0.25;
        const auto moved = translated(fp, dx, dy);
        for (int i = 0; i < 40; ++i) {
            const double px = g.integer(-96, 96) / 32.0;
            const double py = g.integer(-96, 96) / 32.0;
            CHECK(geom::contains(fp, {px, py}) == geom::contains(moved, {px + dx, py + dy}));
        }
    }
}

TEST_CASE("bbox") {
    CHECK(geom::bbox(unit_square()) == geom::BBox{0, 0, 1, 1});
    const auto moved = translated(unit_square(), 3.5, -2.25);
    CHECK(geom::bbox(moved) == geom::BBox{3.5, -2.25, 4.5, -1.25});
}

TEST_CASE("distance_m") {
    CHECK(geom::distance_m({12.3, 45.6}, {12.3, 45.6}, 45.6) == 0.0);
    // 2πR/360 with R = 6,371,008.8 m
    const double one_degree = 2.0 * std::numbers::pi * 6371008.8 / 360.0;
    CHECK(one_degree == doctest::Approx(111195.0802335).epsilon(1e-12));
    CHECK(geom::distance_m({0, 0}, {0, 1}, 0) == doctest::Approx(one_degree).epsilon(1e-13));
    const double at_equator = geom::distance_m({0, 60}, {1, 60}, 0);
    const double at_sixty = geom::distance_m({0, 60}, {1, 60}, 60);
    CHECK(at_sixty == doctest::Approx(0.5 * at_equator).epsilon(1e-12));
}

TEST_CASE("distance_m is symmetric and obeys the triangle inequality") {
    testing::Gen g(3);
    for (int i = 0; i < 500; ++i) {
        const double ref = g.uniform(-60.0, 60.0);
        const GeoPoint a{g.uniform(-1, 1), ref + g.uniform(-0.5, 0.5)};
        const GeoPoint b{g.uniform(-1, 1), ref + g.uniform(-0.5, 0.5)};
        const GeoPoint c{g.uniform(-1, 1), ref + g.uniform(-0.5, 0.5)};
        const double ab = geom::distance_m(a, b, ref);
        CHECK(ab == doctest::Approx(geom::distance_m(b, a, ref)).epsilon(1e-9));
        CHECK(ab <= (geom::distance_m(a, c, ref) + geom::distance_m(c, b, ref)) * (1.0 + 1e-9));
    }
}

TEST_CASE("point_to_footprint_distance_m") {
    const double ref = 30.0;
    const Footprint sq("sq", geom::rectangle(10, 30, 11, 31));
    CHECK(geom::point_to_footprint_distance_m({10.5, 30.5}, sq, ref) == 0.0);

    const double kx = 6371008.8 * std::cos(ref * std::numbers::pi / 180.0) * std::numbers::pi / 180.0;
    for (double d : {0.001, 0.01, 0.25}) {
        const double got = geom::point_to_footprint_distance_m({11.0 + d, 30.5}, sq, ref);
        CHECK(got == doctest::Approx(d * kx).epsilon(1e-6));
    }

    // Equidistant from the east and north edges of the unit-degree square at the equator.
    const Footprint eq("eq", geom::rectangle(0, 0, 1, 1));
    const double via_corner = geom::point_to_footprint_distance_m({1.1, 1.1}, eq, 0.0);
    CHECK(via_corner == doctest::Approx(geom::distance_m({1, 1}, {1.1, 1.1}, 0.0)).epsilon(1e-12));

    // Inside the hole: distance to the hole boundary.
    const double in_hole = geom::point_to_footprint_distance_m({0.5, 0.5}, square_with_hole(), 0.0);
    CHECK(in_hole == doctest::Approx(geom::distance_m({0.5, 0.5}, {0.75, 0.5}, 0.0)).epsilon(1e-9));
}

TEST_CASE("distance is zero exactly when contained") {
    testing::Gen g(19);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Ring> holes;
        if (trial % 2 == 0) holes.push_back(geom::rectangle(-0.1, -0.1, 0.1, 0.1));
        const Footprint fp("s", testing::random_star(g, 0.0, 0.0, 0.3, 1.0, g.integer(3, 10)), holes);
        for (int i = 0; i < 100; ++i) {
            const GeoPoint p{g.uniform(-1.2, 1.2), g.uniform(-1.2, 1.2)};
            CHECK((geom::point_to_footprint_distance_m(p, fp, 0.0) == 0.0) == geom::contains(fp, p));
        }
    }
}

TEST_CASE("invalid geometry is rejected") {
    CHECK_THROWS_AS(Ring({{0, 0}, {1, 0}, {0, 0}}), Error);
    CHECK_THROWS_AS(Ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), Error);  // not closed
    CHECK_THROWS_AS(Ring({{0, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 0}}), Error);
    CHECK_THROWS_AS(Ring({{0, 0}, {200, 0}, {1, 1}, {0, 0}}), Error);
    CHECK_THROWS_AS(Footprint("", geom::rectangle(0, 0, 1, 1)), Error);
    CHECK_THROWS_AS(Footprint("flat", Ring({{0, 0}, {1, 0}, {2, 0}, {0, 0}})), Error);
}
