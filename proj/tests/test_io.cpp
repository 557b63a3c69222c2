#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "bda/error.hpp"
#include "bda/io.hpp"
#include "test_support.hpp"

using namespace bda;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::Io;
}

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

const char* kTwoFeatures = R"({"type":"FeatureCollection","features":[
{"type":"Feature","id":"a","properties":{"name":"north"},
 "geometry":{"type":"Polygon","coordinates":[[[0,0],[2,0],[2,2],[0,2],[0,0]],[[0.5,0.5],[1,0.5],[1,1],[0.5,0.5]]]}},
{"type":"Feature","properties":{"id":"b"},
 "geometry":{"type":"MultiPolygon","coordinates":[[[[3,0],[4,0],[4,1],[3,0]]]]}}
]})";

}  // namespace

TEST_CASE("footprint GeoJSON parsing") {
    const auto recs = io::parse_footprints(kTwoFeatures, "fp.geojson");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].footprint.id() == "a");
    CHECK(recs[0].footprint.holes().size() == 1);
    CHECK(recs[0].properties["name"] == "north");
    CHECK(recs[1].footprint.id() == "b");
    CHECK(recs[1].footprint.exterior().vertices().size() == 4);

    SUBCASE("integer ids") {
        const auto r = io::parse_footprints(
            R"({"type":"FeatureCollection","features":[{"type":"Feature","id":17,"geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,0]]]}}]})",
            "x");
        CHECK(r[0].footprint.id() == "17");
    }
}

TEST_CASE("footprint GeoJSON errors") {
    auto parse = [](const std::string& s) { return io::parse_footprints(s, "fp.geojson"); };
    CHECK(code_of([&] { parse("{\"type\":\"FeatureCollection\",\n\"features\":[\n}"); }) == Errc::ParseError);
    CHECK(message_of([&] { parse("{\"type\":\"FeatureCollection\",\n\"features\":[\n}"); }).find("fp.geojson:3") !=
          std::string::npos);
    CHECK(code_of([&] { parse(R"({"type":"Feature"})"); }) == Errc::ParseError);
    CHECK(code_of([&] {
              parse(R"({"type":"FeatureCollection","features":[{"type":"Feature","geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,0]]]}}]})");
          }) == Errc::ParseError);
    CHECK(code_of([&] {
              parse(R"({"type":"FeatureCollection","features":[{"type":"Feature","id":"a b","geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1],[0,0]]]}}]})");
          }) == Errc::ParseError);
    CHECK(code_of([&] {
              parse(R"({"type":"FeatureCollection","features":[{"type":"Feature","id":"a","geometry":{"type":"Point","coordinates":[0,0]}}]})");
          }) == Errc::ParseError);
    CHECK(code_of([&] {
              parse(R"({"type":"FeatureCollection","features":[{"type":"Feature","id":"a","geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[1,1]]]}}]})");
          }) == Errc::InvalidGeometry);
}

TEST_CASE("footprint GeoJSON round trip") {
    testing::Gen g(8);
    std::vector<geom::Footprint> fps;
    for (int i = 0; i < 50; ++i) {
        fps.emplace_back("f" + std::to_string(i),
                         testing::random_star(g, g.uniform(-90, -89), g.uniform(32, 33), 1e-5, 1e-4, g.integer(3, 10)));
    }
    const auto text = io::write_footprints(fps);
    const auto back = io::footprints_of(io::parse_footprints(text, "rt"));
    REQUIRE(back.size() == fps.size());
    for (std::size_t i = 0; i < fps.size(); ++i) {
        CHECK(back[i].id() == fps[i].id());
        const auto& a = fps[i].exterior().vertices();
        const auto& b = back[i].exterior().vertices();
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].lon == b[k].lon);
            CHECK(a[k].lat == b[k].lat);
        }
    }
    CHECK(io::write_footprints(back) == text);
}

TEST_CASE("assessed GeoJSON") {
    const auto recs = io::parse_footprints(kTwoFeatures, "fp");
    std::vector<zonal::DamageEstimate> est(2);
    est[0] = {"a", 100.0 * 2 / 3, 3, 2, false, false};
    est[1] = {"b", 0.0, 0, 0, true, true};
    const auto text = io::write_assessed(recs, est);
    CHECK(text.find("\"damage_pct\":66.67") != std::string::npos);
    CHECK(text.find("\"name\":\"north\"") != std::string::npos);

    const auto back = io::parse_assessed(text, "assessed");
    REQUIRE(back.size() == 2);
    CHECK(back[0] == est[0]);
    CHECK(back[1] == est[1]);
    CHECK(io::footprints_of(io::parse_footprints(text, "x")).size() == 2);

    const auto bare = io::parse_assessed(
        R"({"type":"FeatureCollection","features":[{"type":"Feature","id":"q","properties":{"damage_pct":12.5}}]})", "x");
    CHECK(bare[0].y_hat == 12.5);
    CHECK(code_of([] {
              io::parse_assessed(R"({"type":"FeatureCollection","features":[{"type":"Feature","id":"q","properties":{}}]})", "x");
          }) == Errc::ParseError);
}

TEST_CASE("round_half_up_2") {
    CHECK(io::round_half_up_2(100.0) == 100.0);
    CHECK(io::round_half_up_2(12.345678) == doctest::Approx(12.35));
    CHECK(io::round_half_up_2(0.125) == doctest::Approx(0.13));
    CHECK(io::round_half_up_2(0.0) == 0.0);
}

TEST_CASE("ground-truth CSV") {
    const auto pts = io::parse_points("point_id,lon,lat,category\r\np1,-90.5,32.9,destroyed\r\np2,-90.4,32.8,affected\r\n", "t.csv");
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].id == "p1");
    CHECK(pts[0].location.lon == -90.5);
    CHECK(pts[1].category == truth::FemaCategory::Affected);
    CHECK(io::parse_points(io::write_points(pts), "rt").size() == 2);
    CHECK(io::write_points(io::parse_points(io::write_points(pts), "rt")) == io::write_points(pts));

    auto parse = [](const std::string& s) { return io::parse_points(s, "t.csv"); };
    CHECK(code_of([&] { parse("id,lon,lat,category\n"); }) == Errc::ParseError);
    CHECK(code_of([&] { parse("point_id,lon,lat,category\np1,x,32,destroyed\n"); }) == Errc::ParseError);
    CHECK(code_of([&] { parse("point_id,lon,lat,category\np1,1,2\n"); }) == Errc::ParseError);
    CHECK(code_of([&] { parse("point_id,lon,lat,category\np1,1,95,destroyed\n"); }) == Errc::ParseError);
    CHECK(code_of([&] { parse("point_id,lon,lat,category\np1,1,2,Destroyed\n"); }) == Errc::UnknownCategory);
    CHECK(code_of([&] { parse("point_id,lon,lat,category\np1,1,2,destroyed\np1,1,2,affected\n"); }) ==
          Errc::DuplicatePointId);
    CHECK(message_of([&] { parse("point_id,lon,lat,category\np1,1,2,destroyed\np2,1,2,bad\n"); }).find("t.csv:3") !=
          std::string::npos);
}

TEST_CASE("match CSV") {
    const std::vector<truth::GroundTruthPoint> pts{{"p1", {0, 0}, truth::FemaCategory::Destroyed},
                                                   {"p2", {0, 0}, truth::FemaCategory::Affected},
                                                   {"p3", {0, 0}, truth::FemaCategory::Affected}};
    truth::MatchResult r;
    r.matched = {{"p1", "a", 0.0}, {"p3", "b", 12.5}};
    r.unmatched = {"p2"};
    const auto text = io::write_matches(pts, r);
    CHECK(text == "point_id,footprint_id,distance_m\np1,a,0\np2,,\np3,b,12.5\n");
    const auto back = io::parse_matches(text, "m.csv");
    CHECK(back.matched == r.matched);
    CHECK(back.unmatched == r.unmatched);
    CHECK(code_of([] { io::parse_matches("point_id,footprint_id,distance_m\np1,a,-1\n", "m"); }) == Errc::ParseError);
}

TEST_CASE("curve CSV") {
    metrics::PRCurve c;
    c.points = {{100, 1.0, 0.0, 0, 0, 2}, {50, 1.0, 0.5, 1, 0, 1}, {0, 2.0 / 3.0, 1.0, 2, 1, 0}};
    const auto text = io::write_curve(c);
    CHECK(text.rfind("theta,precision,recall\n100,1,0\n50,1,0.5\n", 0) == 0);
    const auto back = io::parse_curve(text, "c.csv");
    REQUIRE(back.size() == 3);
    CHECK(back[2].precision == 2.0 / 3.0);
    CHECK(code_of([] { io::parse_curve("theta,precision,recall\n", "c"); }) == Errc::ParseError);
    CHECK(code_of([] { io::parse_curve("", "c"); }) == Errc::ParseError);
    CHECK(code_of([] { io::parse_curve("theta,precision,recall\n0,1.5,0\n", "c"); }) == Errc::ParseError);
}

TEST_CASE("report JSON key order") {
    metrics::ValidationReport r;
    r.n_samples = 4;
    r.n_positive = 2;
    r.scheme = "major_plus";
    r.precision0 = 0.5;
    r.recall0 = 1.0;
    r.ap = 0.8333333333333333;
    const auto text = io::write_report(r);
    CHECK(text ==
          "{\n  \"n_samples\": 4,\n  \"n_positive\": 2,\n  \"scheme\": \"major_plus\",\n  \"precision0\": 0.5,\n"
          "  \"recall0\": 1.0,\n  \"average_precision\": 0.8333333333333333\n}\n");
}

TEST_CASE("PR plot SVG") {
    const std::vector<metrics::PRPoint> perfect{{100, 1, 0}, {50, 1, 0.5}, {0, 1, 1}};
    const auto svg = io::render_pr_svg(perfect);
    CHECK(svg.find("viewBox=\"0 0 800 600\"") != std::string::npos);
    CHECK(svg.find(">Recall<") != std::string::npos);
    CHECK(svg.find(">Precision<") != std::string::npos);
    CHECK(svg.find("points=\"80.00,40.00 420.00,40.00 760.00,40.00\"") != std::string::npos);
    CHECK(io::render_pr_svg(perfect) == svg);
}

TEST_CASE("scene spec JSON") {
    const auto s = io::parse_scene_spec(
        R"({"seed": 7, "grid_cols": 5, "origin": {"lon": -90.1, "lat": 32.5}, "swath_end": [-90.0, 32.6], "pixel_noise_rate": 0.1})",
        "spec.json");
    CHECK(s.seed == 7);
    CHECK(s.grid_cols == 5);
    CHECK(s.grid_rows == synth::SceneSpec{}.grid_rows);
    CHECK(s.origin.lon == -90.1);
    CHECK(s.swath_end.lat == 32.6);
    CHECK(s.pixel_noise_rate == 0.1);

    const auto back = io::parse_scene_spec(io::write_scene_spec(s), "rt");
    CHECK(io::write_scene_spec(back) == io::write_scene_spec(s));

    CHECK(code_of([] { io::parse_scene_spec(R"({"sead": 1})", "x"); }) == Errc::ParseError);
    CHECK(code_of([] { io::parse_scene_spec(R"({"seed": -1})", "x"); }) == Errc::ParseError);
    CHECK(code_of([] { io::parse_scene_spec(R"({"origin": [1]})", "x"); }) == Errc::ParseError);
    CHECK(code_of([] { io::parse_scene_spec(R"([1, 2])", "x"); }) == Errc::ParseError);
}

TEST_CASE("scene files") {
    synth::SceneSpec spec;
    spec.grid_cols = spec.grid_rows = 6;
    spec.swath_start = {-90.885, 32.9};
    spec.swath_end = {-90.883, 32.9015};
    const auto scene = synth::generate(spec);
    const auto dir = testing::scratch_dir("io_scene");
    io::write_scene(scene, dir);
    for (const char* name : {"footprints.geojson", "raster.asc", "truth.csv", "oracle.csv"}) {
        CHECK(std::filesystem::exists(dir / name));
    }
    CHECK(raster::parse_ascii_grid(io::read_file(dir / "raster.asc")) == scene.raster);
    CHECK(io::parse_points(io::read_file(dir / "truth.csv"), "t").size() == 36);
    CHECK(code_of([&] { io::read_file(dir / "missing.csv"); }) == Errc::Io);
}

TEST_CASE("id charset") {
    CHECK(io::is_valid_id("b00001"));
    CHECK(io::is_valid_id("A-z_9"));
    CHECK_FALSE(io::is_valid_id(""));
    CHECK_FALSE(io::is_valid_id("a,b"));
    CHECK_FALSE(io::is_valid_id("a b"));
}
