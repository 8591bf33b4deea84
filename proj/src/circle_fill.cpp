#include <cmath>
#include <numbers>
#include <string>

#include "figdraw/canvas.hpp"
#include "figdraw/errors.hpp"

namespace figdraw::raster {

namespace {

// Pen colour is swapped for the duration of one fill and restored after.
class PenColorScope {
public:
  PenColorScope(Canvas& cv, NamedColor c) : cv_(cv), saved_(cv.pen_color()) {
    cv.set_pen_color(c);
  }
  ~PenColorScope() { cv_.set_pen_color(saved_); }
  PenColorScope(const PenColorScope&) = delete;
  PenColorScope& operator=(const PenColorScope&) = delete;

private:
  Canvas& cv_;
  NamedColor saved_;
};

void polygon(Canvas& cv, const geo::Point& center, double radius, int chords) {
  const double step = 2 * std::numbers::pi / chords;
  geo::Point prev = center.shift(radius, 0.0);
  for (int j = 1; j <= chords; ++j) {
    // The last vertex is the first one again, exactly.
    const geo::Point next = j == chords ? center.shift(radius, 0.0)
                                        : center.shift(radius * std::cos(j * step),
                                                       radius * std::sin(j * step));
    cv.draw_line(prev, next);
    prev = next;
  }
}

} // namespace

std::size_t draw_circle_outline(Canvas& cv, const geo::Circle& c, int chords) {
  if (chords < 3) throw RangeError("a circle outline needs at least 3 chords");
  PenColorScope pen(cv, c.color());
  const double px_radius =
      c.radius() * std::min(cv.pixels_per_unit_x(), cv.pixels_per_unit_y());
  if (px_radius < 1.0) {
    cv.draw_point(c.center());
    return 1;
  }
  polygon(cv, c.center(), c.radius(), chords);
  return static_cast<std::size_t>(chords);
}

std::size_t fill_circle_radial(Canvas& cv, const geo::Circle& c) {
  PenColorScope pen(cv, c.color());
  const auto& o = c.center();
  for (int a = 0; a < kRadialDiameters; ++a) {
    const double theta = a * std::numbers::pi / 180;
    const double dx = c.radius() * std::cos(theta);
    const double dy = c.radius() * std::sin(theta);
    cv.draw_line(o.shift(dx, dy), o.shift(-dx, -dy));
  }
  return kRadialDiameters;
}

std::size_t fill_circle_concentric(Canvas& cv, const geo::Circle& c, int rings,
                                   int chords_per_ring) {
  if (rings < 1) throw RangeError("concentric fill needs rings >= 1, got " + std::to_string(rings));
  if (chords_per_ring < 3) {
    throw RangeError("concentric fill needs chords >= 3, got " + std::to_string(chords_per_ring));
  }
  PenColorScope pen(cv, c.color());
  for (int k = 1; k <= rings; ++k) {
    polygon(cv, c.center(), c.radius() * k / rings, chords_per_ring);
  }
  return static_cast<std::size_t>(rings) * static_cast<std::size_t>(chords_per_ring);
}

} // namespace figdraw::raster
