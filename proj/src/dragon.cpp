#include "figdraw/dragon.hpp"

#include <algorithm>
#include <string>

#include "figdraw/errors.hpp"

namespace figdraw::fractal {

namespace {

void check_depth(int depth, int max_depth) {
  if (depth < 0) throw RangeError("dragon depth must be >= 0, got " + std::to_string(depth));
  if (depth > max_depth) {
    throw CapacityError("dragon depth " + std::to_string(depth) + " exceeds the cap of " +
                        std::to_string(max_depth));
  }
}

template <class Emit>
void expand(int n, const geo::Point& p1, const geo::Point& p2, Emit& emit) {
  if (n == 0) {
    emit(Segment{p1, p2});
    return;
  }
  expand(n - 1, dragon_t1(p1), dragon_t1(p2), emit);
  expand(n - 1, dragon_t2(p1), dragon_t2(p2), emit);
  expand(n - 1, dragon_t3(p1), dragon_t3(p2), emit);
  expand(n - 1, dragon_t4(p1), dragon_t4(p2), emit);
}

} // namespace

geo::Point dragon_t1(const geo::Point& p) { return p.scale(0.5, 0.5).rotate(90.0); }

geo::Point dragon_t2(const geo::Point& p) {
  return p.scale(0.5, 0.5).rotate(180.0).shift(0.5, 0.5);
}

geo::Point dragon_t3(const geo::Point& p) {
  return p.scale(0.5, 0.5).rotate(-90.0).shift(0.5, 0.5);
}

geo::Point dragon_t4(const geo::Point& p) {
  return p.scale(0.5, 0.5).rotate(180.0).shift(1.0, 0.0);
}

std::uint64_t dragon_segment_count(int depth, int max_depth) {
  check_depth(depth, max_depth);
  return std::uint64_t{1} << (2 * depth);
}

void for_each_dragon_segment(const DragonSpec& spec, const std::function<void(const Segment&)>& emit,
                             int max_depth) {
  check_depth(spec.depth, max_depth);
  expand(spec.depth, spec.start, spec.finish, emit);
}

std::vector<Segment> dragon_segments(const DragonSpec& spec, int max_depth) {
  std::vector<Segment> out;
  out.reserve(dragon_segment_count(spec.depth, max_depth));
  auto push = [&out](const Segment& s) { out.push_back(s); };
  expand(spec.depth, spec.start, spec.finish, push);
  return out;
}

void draw_dragon(raster::Canvas& cv, const DragonSpec& spec, int max_depth) {
  check_depth(spec.depth, max_depth);
  cv.set_pen_color(spec.color);
  auto line = [&cv](const Segment& s) { cv.draw_line(s.a, s.b); };
  expand(spec.depth, spec.start, spec.finish, line);
}

std::uint64_t dragon_point_count(int depth, int max_depth) {
  // 22 * (4^31 - 1) / 3 no longer fits in 64 bits.
  check_depth(depth, std::min(max_depth, 30));
  constexpr std::uint64_t kPerCall = 2 * (2 + 3 + 3 + 3);
  return kPerCall * (((std::uint64_t{1} << (2 * depth)) - 1) / 3);
}

raster::Canvas dragon_canvas(std::size_t width, std::size_t height) {
  return raster::Canvas(width, height, {-0.5, 1.5}, {-0.5, 1.0});
}

} // namespace figdraw::fractal
