#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "figdraw/dragon.hpp"
#include "figdraw/errors.hpp"
#include "oracles.hpp"

using namespace figdraw;
using namespace figdraw::fractal;

namespace {

double length(const Segment& s) { return geo::distance(s.a, s.b); }

} // namespace

TEST_CASE("depth 0 is the base segment") {
  const auto segs = dragon_segments({{0, 0}, {1, 0}, 0});
  REQUIRE(segs.size() == 1);
  CHECK(segs[0] == Segment{{0, 0}, {1, 0}});
}

TEST_CASE("segment counts are powers of four") {
  for (int n = 0; n <= 9; ++n) {
    DragonSpec spec;
    spec.depth = n;
    CHECK(dragon_segments(spec).size() == dragon_segment_count(n));
    CHECK(dragon_segment_count(n) == (std::uint64_t{1} << (2 * n)));
  }
  CHECK(dragon_segment_count(10) == 1048576);
  CHECK(dragon_segment_count(15) == (std::uint64_t{1} << 30));
}

TEST_CASE("depth limits") {
  CHECK_THROWS_AS((void)dragon_segment_count(16), CapacityError);
  CHECK_THROWS_AS((void)dragon_segment_count(-1), RangeError);
  DragonSpec big;
  big.depth = 16;
  CHECK_THROWS_AS((void)dragon_segments(big), CapacityError);
  CHECK(dragon_segment_count(20, 31) == (std::uint64_t{1} << 40));
}

TEST_CASE("segments match an independent recursion") {
  for (int n = 0; n <= 6; ++n) {
    oracle::DragonTally t;
    t.keep = true;
    t.draw(n, {0, 0}, {1, 0});
    DragonSpec spec;
    spec.depth = n;
    const auto segs = dragon_segments(spec);
    REQUIRE(segs.size() == t.segments.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
      CHECK(std::abs(segs[i].a.x() - t.segments[i].a.x) <= 1e-12);
      CHECK(std::abs(segs[i].a.y() - t.segments[i].a.y) <= 1e-12);
      CHECK(std::abs(segs[i].b.x() - t.segments[i].b.x) <= 1e-12);
      CHECK(std::abs(segs[i].b.y() - t.segments[i].b.y) <= 1e-12);
    }
  }
}

TEST_CASE("all segments at depth n have length 2^-n") {
  for (int n : {1, 4, 8}) {
    DragonSpec spec;
    spec.depth = n;
    const double expect = std::ldexp(1.0, -n);
    for (const auto& s : dragon_segments(spec)) CHECK(std::abs(length(s) - expect) <= 1e-12);
  }
}

TEST_CASE("first quarter is the T1 image at one depth less") {
  for (int n = 1; n <= 6; ++n) {
    DragonSpec spec;
    spec.depth = n;
    const auto full = dragon_segments(spec);
    DragonSpec sub = spec;
    sub.depth = n - 1;
    sub.start = dragon_t1(spec.start);
    sub.finish = dragon_t1(spec.finish);
    const auto quarter = dragon_segments(sub);
    REQUIRE(quarter.size() * 4 == full.size());
    CHECK(std::equal(quarter.begin(), quarter.end(), full.begin()));
  }
}

TEST_CASE("point count matches the instrumented recursion") {
  CHECK(dragon_point_count(0) == 0);
  CHECK(dragon_point_count(1) == 22);
  for (int n = 0; n <= 8; ++n) {
    oracle::DragonTally t;
    t.draw(n, {0, 0}, {1, 0});
    CHECK(dragon_point_count(n) == t.created);
    if (n > 0) CHECK(dragon_point_count(n) == 4 * dragon_point_count(n - 1) + 22);
  }
  CHECK_NOTHROW((void)dragon_point_count(30));
  CHECK_THROWS_AS((void)dragon_point_count(31), CapacityError);
}

TEST_CASE("drawing issues one line per segment, in the requested colour") {
  for (int n = 0; n <= 6; ++n) {
    auto cv = dragon_canvas(64, 64);
    DragonSpec spec;
    spec.depth = n;
    spec.color = NamedColor::magenta;
    draw_dragon(cv, spec);
    CHECK(cv.primitive_count() == dragon_segment_count(n));
    CHECK(cv.pen_color() == NamedColor::magenta);
    for (const auto& px : cv.pixels()) {
      CHECK((px == rgb(NamedColor::white) || px == rgb(NamedColor::magenta)));
    }
  }
}

TEST_CASE("depth-10 curve lies inside the default window") {
  DragonSpec spec;
  double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
  std::uint64_t n = 0;
  for_each_dragon_segment(spec, [&](const Segment& s) {
    ++n;
    for (const auto& p : {s.a, s.b}) {
      xmin = std::min(xmin, p.x());
      xmax = std::max(xmax, p.x());
      ymin = std::min(ymin, p.y());
      ymax = std::max(ymax, p.y());
    }
  });
  CHECK(n == 1048576);
  const auto cv = dragon_canvas();
  CHECK(xmin > cv.x_scale().min);
  CHECK(xmax < cv.x_scale().max);
  CHECK(ymin > cv.y_scale().min);
  CHECK(ymax < cv.y_scale().max);
}
