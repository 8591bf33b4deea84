#pragma once

#include "figdraw/color.hpp"

namespace figdraw::geo {

/// An immutable point in canvas units. Coordinates are always finite; every
/// constructor and transform throws NumericError otherwise.
class Point {
public:
  constexpr Point() noexcept = default;
  Point(double x, double y);

  [[nodiscard]] constexpr double x() const noexcept { return x_; }
  [[nodiscard]] constexpr double y() const noexcept { return y_; }

  [[nodiscard]] Point scale(double a, double b) const;
  [[nodiscard]] Point shift(double a, double b) const;
  /// Counter-clockwise rotation about the origin; `angle` is in degrees.
  [[nodiscard]] Point rotate(double angle) const;
  [[nodiscard]] double distance_to(const Point& p) const noexcept;

  friend constexpr bool operator==(const Point&, const Point&) = default;

private:
  double x_ = 0.0;
  double y_ = 0.0;
};

[[nodiscard]] inline double distance(const Point& p, const Point& q) noexcept {
  return p.distance_to(q);
}

struct Measures {
  double area;
  double periphery;
};

/// A circle with a positive finite radius. Moving a circle yields a new one.
class Circle {
public:
  Circle(double radius, Point center, NamedColor color = NamedColor::black);

  [[nodiscard]] double radius() const noexcept { return radius_; }
  [[nodiscard]] const Point& center() const noexcept { return center_; }
  [[nodiscard]] NamedColor color() const noexcept { return color_; }

  // Boundaries are inclusive and compared without tolerance.
  [[nodiscard]] bool contains(const Point& p) const noexcept;
  [[nodiscard]] bool contains(const Circle& c) const noexcept;
  [[nodiscard]] bool intersects(const Circle& c) const noexcept;
  [[nodiscard]] bool disjoint(const Circle& c) const noexcept { return !intersects(c); }

  [[nodiscard]] double area() const noexcept;
  [[nodiscard]] double periphery() const noexcept;
  [[nodiscard]] Measures measures() const noexcept { return {area(), periphery()}; }

  [[nodiscard]] Circle moved_to(const Point& p) const noexcept;

  friend bool operator==(const Circle&, const Circle&) = default;

private:
  double radius_;
  Point center_;
  NamedColor color_;
};

[[nodiscard]] inline bool contains_point(const Circle& c, const Point& p) noexcept {
  return c.contains(p);
}
[[nodiscard]] inline bool contains_circle(const Circle& outer, const Circle& inner) noexcept {
  return outer.contains(inner);
}
[[nodiscard]] inline bool intersects(const Circle& a, const Circle& b) noexcept {
  return a.intersects(b);
}
[[nodiscard]] inline bool disjoint(const Circle& a, const Circle& b) noexcept {
  return a.disjoint(b);
}
[[nodiscard]] inline Circle move(const Circle& c, const Point& p) noexcept {
  return c.moved_to(p);
}

} // namespace figdraw::geo
