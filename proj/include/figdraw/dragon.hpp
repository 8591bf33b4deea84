#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "figdraw/canvas.hpp"
#include "figdraw/geometry.hpp"

namespace figdraw::fractal {

struct Segment {
  geo::Point a;
  geo::Point b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct DragonSpec {
  geo::Point start{0.0, 0.0};
  geo::Point finish{1.0, 0.0};
  int depth = 10;
  NamedColor color = NamedColor::blue;
};

/// Largest depth materialised as a vector by default (4^15 segments).
inline constexpr int kMaxDepth = 15;
/// Largest depth the streaming walk accepts; 4^31 still fits a uint64 count.
inline constexpr int kMaxStreamingDepth = 31;

/// The four maps applied to both endpoints at every level, in call order.
/// Each chains Point operations left to right, scale first.
[[nodiscard]] geo::Point dragon_t1(const geo::Point& p);
[[nodiscard]] geo::Point dragon_t2(const geo::Point& p);
[[nodiscard]] geo::Point dragon_t3(const geo::Point& p);
[[nodiscard]] geo::Point dragon_t4(const geo::Point& p);

/// 4^depth, or CapacityError when depth exceeds `max_depth`.
[[nodiscard]] std::uint64_t dragon_segment_count(int depth, int max_depth = kMaxDepth);

/// Calls `emit` for every depth-0 segment in recursion order without storing
/// them.
void for_each_dragon_segment(const DragonSpec& spec, const std::function<void(const Segment&)>& emit,
                             int max_depth = kMaxStreamingDepth);

/// All 4^depth segments in recursion order.
[[nodiscard]] std::vector<Segment> dragon_segments(const DragonSpec& spec, int max_depth = kMaxDepth);

/// Draws every segment in spec.color, adding 4^depth to the primitive count.
/// The canvas pen colour is left as spec.color.
void draw_dragon(raster::Canvas& cv, const DragonSpec& spec, int max_depth = kMaxStreamingDepth);

/// Intermediate Point values created by the chained transforms when the
/// recursion runs to `depth`: every scale, shift or rotate makes one Point,
/// a level transforms both endpoints through T1 (2 operations) and T2..T4
/// (3 each), giving 22 per non-leaf call and 22 * (4^depth - 1) / 3 in all.
[[nodiscard]] std::uint64_t dragon_point_count(int depth, int max_depth = kMaxStreamingDepth);

/// User window that holds a unit dragon, x in [-0.5, 1.5], y in [-0.5, 1.0].
[[nodiscard]] raster::Canvas dragon_canvas(std::size_t width = 512, std::size_t height = 512);

} // namespace figdraw::fractal
