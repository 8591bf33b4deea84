#include "figdraw/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "figdraw/errors.hpp"

namespace figdraw::geo {

Point::Point(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw NumericError("point coordinates must be finite");
  }
}

Point Point::scale(double a, double b) const { return {a * x_, b * y_}; }

Point Point::shift(double a, double b) const { return {a + x_, b + y_}; }

Point Point::rotate(double angle) const {
  const double theta = angle * std::numbers::pi / 180;
  return {x_ * std::cos(theta) - y_ * std::sin(theta), x_ * std::sin(theta) + y_ * std::cos(theta)};
}

double Point::distance_to(const Point& p) const noexcept {
  const double dx = x_ - p.x_;
  const double dy = y_ - p.y_;
  return std::sqrt(dx * dx + dy * dy);
}

Circle::Circle(double radius, Point center, NamedColor color)
    : radius_(radius), center_(center), color_(color) {
  if (!std::isfinite(radius) || radius <= 0) {
    throw RangeError("circle radius must be positive and finite, got " + std::to_string(radius));
  }
}

bool Circle::contains(const Point& p) const noexcept { return p.distance_to(center_) <= radius_; }

bool Circle::contains(const Circle& c) const noexcept {
  return center_.distance_to(c.center_) + c.radius_ <= radius_;
}

bool Circle::intersects(const Circle& c) const noexcept {
  return center_.distance_to(c.center_) <= radius_ + c.radius_;
}

double Circle::area() const noexcept { return std::numbers::pi * radius_ * radius_; }

double Circle::periphery() const noexcept { return std::numbers::pi * 2 * radius_; }

Circle Circle::moved_to(const Point& p) const noexcept {
  Circle out = *this;
  out.center_ = p;
  return out;
}

} // namespace figdraw::geo
