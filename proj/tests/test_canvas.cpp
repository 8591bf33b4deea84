#include <algorithm>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "figdraw/canvas.hpp"
#include "figdraw/errors.hpp"
#include "figdraw/moving_circle.hpp"
#include "oracles.hpp"

using namespace figdraw;
using namespace figdraw::raster;

namespace {

std::size_t count_color(const Canvas& cv, NamedColor c) {
  return static_cast<std::size_t>(std::ranges::count(cv.pixels(), rgb(c)));
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

} // namespace

TEST_CASE("ppm bytes for tiny canvases match the golden files") {
  const Canvas one(1, 1);
  CHECK(export_ppm(one) == oracle::read_file(oracle::test_dir() / "golden" / "ppm_1x1_white.ppm"));

  Canvas two(2, 1);
  two.set_pen_radius(0);
  two.draw_point({0, 0});
  CHECK(export_ppm(two) ==
        oracle::read_file(oracle::test_dir() / "golden" / "ppm_2x1_left_black.ppm"));
  CHECK(export_ppm(two) == export_ppm(two));
}

TEST_CASE("canvas construction checks") {
  CHECK_THROWS_AS(Canvas(0, 5), RangeError);
  CHECK_THROWS_AS(Canvas(5, 5, {1, 1}, {}), RangeError);
  CHECK_THROWS_AS(Canvas(5, 5, {}, {3, 2}), RangeError);
  Canvas cv;
  CHECK(cv.width() == 512);
  CHECK(cv.pen_radius() == kDefaultPenRadius);
  CHECK(cv.pen_color() == NamedColor::black);
  CHECK(count_color(cv, NamedColor::white) == 512u * 512u);
  CHECK_THROWS_AS(cv.set_pen_radius(-0.1), RangeError);
  CHECK_THROWS_AS((void)cv.pixel(512, 0), RangeError);
}

TEST_CASE("mapping is exact at range endpoints") {
  const Canvas cv(300, 200, {-2, 3}, {10, 20});
  const auto lo = cv.to_pixel({-2, 10});
  CHECK(lo.col == 0.0);
  CHECK(lo.row == 199.0);
  const auto hi = cv.to_pixel({3, 20});
  CHECK(hi.col == 299.0);
  CHECK(hi.row == 0.0);
  CHECK_THROWS_AS((void)Canvas(4, 4, {0, 1e-300}, {}).to_pixel({1e300, 0}), NumericError);
}

TEST_CASE("hairline point inks exactly the nearest pixel") {
  Canvas cv(10, 10, {0, 9}, {0, 9});
  cv.set_pen_radius(0);
  cv.set_pen_color(NamedColor::red);
  cv.draw_point({3.2, 6.9});
  CHECK(count_color(cv, NamedColor::red) == 1);
  CHECK(cv.pixel(3, 2) == rgb(NamedColor::red));
}

TEST_CASE("thick strokes cover the pen disc") {
  Canvas cv(101, 101, {0, 100}, {0, 100});
  cv.set_pen_radius(0.05); // about 5 px
  cv.draw_point({50, 50});
  const auto disc = oracle::disc_pixels(101, 101, 0, 100, 0, 100, 50, 50,
                                        cv.stroke_radius_px());
  CHECK(count_color(cv, NamedColor::black) == disc.size());
  for (auto [c, r] : disc) CHECK(cv.pixel(c, r) == rgb(NamedColor::black));
}

TEST_CASE("a horizontal line covers every pixel between its ends") {
  Canvas cv(50, 10, {0, 49}, {0, 9});
  cv.set_pen_radius(0);
  cv.draw_line({5, 4}, {40, 4});
  for (std::size_t c = 5; c <= 40; ++c) CHECK(cv.pixel(c, 5) == rgb(NamedColor::black));
  CHECK(count_color(cv, NamedColor::black) == 36);
}

TEST_CASE("lines far outside the canvas are clipped, not walked") {
  Canvas cv(20, 20, {0, 1}, {0, 1});
  cv.draw_line({-1e9, 0.5}, {1e9, 0.5});
  CHECK(count_color(cv, NamedColor::black) > 0);
  CHECK(cv.primitive_count() == 1);
}

TEST_CASE("primitive accounting for fills and outlines") {
  for (double r : {0.5, 5.0, 25.0, 40.0}) {
    Canvas cv;
    const geo::Circle c(r, {50, 50});
    CHECK(fill_circle_radial(cv, c) == 180);
    CHECK(cv.primitive_count() == 180);
    cv.reset_primitive_count();
    for (auto [rings, chords] : {std::pair{10, 180}, std::pair{40, 180}, std::pair{160, 180},
                                 std::pair{3, 7}}) {
      cv.reset_primitive_count();
      const auto n = fill_circle_concentric(cv, c, rings, chords);
      CHECK(n == static_cast<std::size_t>(rings * chords));
      CHECK(cv.primitive_count() == n);
    }
  }
  Canvas cv;
  CHECK(draw_circle_outline(cv, geo::Circle(10, {50, 50})) == 360);
  CHECK(cv.primitive_count() == 360);
  CHECK(draw_circle_outline(cv, geo::Circle(0.1, {50, 50})) == 1);
  CHECK(cv.primitive_count() == 361);
  CHECK_THROWS_AS((void)draw_circle_outline(cv, geo::Circle(10, {50, 50}), 2), RangeError);
  CHECK_THROWS_AS((void)fill_circle_concentric(cv, geo::Circle(10, {50, 50}), 0, 180), RangeError);
  CHECK_THROWS_AS((void)fill_circle_concentric(cv, geo::Circle(10, {50, 50}), 5, 2), RangeError);
}

TEST_CASE("fills restore the pen colour and only paint the circle colour") {
  Canvas cv;
  cv.set_pen_color(NamedColor::green);
  (void)fill_circle_radial(cv, geo::Circle(20, {50, 50}, NamedColor::blue));
  CHECK(cv.pen_color() == NamedColor::green);
  CHECK(count_color(cv, NamedColor::white) + count_color(cv, NamedColor::blue) == 512u * 512u);
}

TEST_CASE("radial and concentric fills cover the analytic disc") {
  const auto disc = oracle::disc_pixels(512, 512, 0, 100, 0, 100, 50, 50, 40);
  Canvas radial;
  radial.set_pen_radius(0.01);
  (void)fill_circle_radial(radial, geo::Circle(40, {50, 50}, NamedColor::blue));
  Canvas conc;
  conc.set_pen_radius(0.01);
  (void)fill_circle_concentric(conc, geo::Circle(40, {50, 50}, NamedColor::blue), 160, 180);

  std::size_t hit_r = 0;
  std::size_t hit_c = 0;
  for (auto [c, r] : disc) {
    hit_r += radial.pixel(c, r) == rgb(NamedColor::blue);
    hit_c += conc.pixel(c, r) == rgb(NamedColor::blue);
  }
  const double area = static_cast<double>(disc.size());
  CHECK(static_cast<double>(hit_r) / area >= 0.99);
  CHECK(static_cast<double>(hit_c) / area >= 0.99);

  std::size_t sym = 0;
  for (std::size_t i = 0; i < radial.pixels().size(); ++i) {
    sym += (radial.pixels()[i] == rgb(NamedColor::blue)) != (conc.pixels()[i] == rgb(NamedColor::blue));
  }
  CHECK(static_cast<double>(sym) / area < 0.02);
}

TEST_CASE("retained primitives and clear") {
  Canvas cv;
  cv.draw_line({0, 0}, {100, 100});
  cv.draw_point({50, 50});
  REQUIRE(cv.primitives().size() == 2);
  CHECK(cv.primitives()[0].kind == Primitive::Kind::line);
  CHECK(cv.primitives()[1].kind == Primitive::Kind::point);
  cv.clear();
  CHECK(cv.primitives().empty());
  CHECK(cv.primitive_count() == 2);
  CHECK(count_color(cv, NamedColor::white) == 512u * 512u);
  cv.set_retain_primitives(false);
  cv.draw_point({1, 1});
  CHECK(cv.primitives().empty());
  CHECK(cv.primitive_count() == 3);
}

TEST_CASE("svg export") {
  Canvas cv;
  cv.set_pen_radius(0.01);
  cv.set_pen_color(NamedColor::red);
  cv.draw_line({0, 0}, {100, 100});
  cv.set_pen_radius(0);
  cv.draw_point({50, 50});
  const auto svg = export_svg(cv);
  CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n", 0) == 0);
  CHECK(svg.find("<line x1=\"0.5\" y1=\"511.5\" x2=\"511.5\" y2=\"0.5\" stroke=\"rgb(255,0,0)\" "
                 "stroke-width=\"10.24\" stroke-linecap=\"round\"/>") != std::string::npos);
  CHECK(svg.find("<circle cx=\"256\" cy=\"256\" r=\"0.5\" fill=\"rgb(255,0,0)\"/>") !=
        std::string::npos);
  CHECK(count_substr(svg, "<line ") == 1);
  CHECK(count_substr(svg, "<circle ") == 1);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
}

TEST_CASE("format selection by extension") {
  CHECK(format_for_path("a.svg") == ImageFormat::svg);
  CHECK(format_for_path("A.SVG") == ImageFormat::svg);
  CHECK(format_for_path("a.ppm") == ImageFormat::ppm);
  CHECK(format_for_path("noext") == ImageFormat::ppm);
}

TEST_CASE("moving circle frames are deterministic and contained") {
  for (auto sampler : {Sampler::rectangular, Sampler::polar}) {
    MovingCircleParams p;
    p.sampler = sampler;
    p.frames = 4;
    p.seed = 7;
    p.pixel_width = p.pixel_height = 64;
    const auto a = moving_circle_frames(p);
    const auto b = moving_circle_frames(p);
    REQUIRE(a.size() == 4);
    std::set<std::pair<double, double>> centres;
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(export_ppm(a[i].canvas) == export_ppm(b[i].canvas));
      CHECK(geo::contains_circle(a[i].fixed, a[i].moving));
      CHECK(a[i].moving.color() == NamedColor::red);
      CHECK(a[i].fixed.color() == NamedColor::black);
      CHECK(a[i].attempts >= 1);
      centres.insert({a[i].moving.center().x(), a[i].moving.center().y()});
    }
    CHECK(centres.size() == 4);
    p.seed = 8;
    CHECK(export_ppm(moving_circle_frames(p)[0].canvas) != export_ppm(a[0].canvas));
  }
}

TEST_CASE("impossible placements") {
  MovingCircleParams p;
  p.small_radius = p.big_radius;
  CHECK_THROWS_AS((void)moving_circle_frames(p), PlacementError);
  p.small_radius = 50;
  CHECK_THROWS_AS((void)moving_circle_frames(p), PlacementError);
  p.small_radius = 39.999;
  p.max_attempts = 3;
  CHECK_THROWS_AS((void)moving_circle_frames(p), PlacementError);
}

TEST_CASE("frame sequence files and manifest") {
  MovingCircleParams p;
  p.frames = 3;
  p.pixel_width = p.pixel_height = 32;
  const auto frames = moving_circle_frames(p);
  const auto dir = std::filesystem::temp_directory_path() / "figdraw_test_frames";
  std::filesystem::remove_all(dir);
  const auto names = write_frame_sequence(frames, dir);
  CHECK(names == std::vector<std::string>{"frame_0000.ppm", "frame_0001.ppm", "frame_0002.ppm"});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(oracle::read_file(dir / names[i]) == export_ppm(frames[i].canvas));
  }
  CHECK(oracle::read_file(dir / "manifest.json") ==
        "{\n  \"frame_interval_us\": 200,\n  \"frame_count\": 3,\n  \"frames\": [\n"
        "    \"frame_0000.ppm\",\n    \"frame_0001.ppm\",\n    \"frame_0002.ppm\"\n  ]\n}\n");
  std::filesystem::remove_all(dir);
}
