#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "figdraw/color.hpp"
#include "figdraw/geometry.hpp"

namespace figdraw::raster {

/// A user-coordinate interval mapped onto one pixel axis.
struct Range {
  double min = 0.0;
  double max = 100.0;
  friend bool operator==(const Range&, const Range&) = default;
};

inline constexpr double kDefaultPenRadius = 0.002;

/// One retained draw call, in user coordinates. Points have a == b.
struct Primitive {
  enum class Kind : std::uint8_t { line, point };
  Kind kind;
  geo::Point a;
  geo::Point b;
  NamedColor color;
  double pen_radius;
};

/// A raster drawing surface with StdDraw-style user scales and pen state.
///
/// User (x.min, y.min) maps to the centre of the bottom-left pixel and
/// (x.max, y.max) to the centre of the top-right one; the y axis points up.
/// The pen radius is a fraction of min(width, height). Every draw_line and
/// draw_point call adds one to primitive_count() and, unless retention is
/// switched off, appends a Primitive to the log used for SVG export.
///
/// Lines rasterize by stamping a filled disc of the pen radius at unit-pixel
/// steps along the segment (DDA). Pixels are only ever overwritten with the
/// current pen colour.
///
/// Single writer; a Canvas may be moved between threads and exported
/// concurrently while nobody draws on it.
class Canvas {
public:
  Canvas(std::size_t width = 512, std::size_t height = 512, Range x_scale = {}, Range y_scale = {});

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t height() const noexcept { return height_; }
  [[nodiscard]] Range x_scale() const noexcept { return x_scale_; }
  [[nodiscard]] Range y_scale() const noexcept { return y_scale_; }

  void set_pen_radius(double r);
  [[nodiscard]] double pen_radius() const noexcept { return pen_radius_; }
  /// Pen radius converted to pixels.
  [[nodiscard]] double stroke_radius_px() const noexcept;

  void set_pen_color(NamedColor c) noexcept { pen_color_ = c; }
  [[nodiscard]] NamedColor pen_color() const noexcept { return pen_color_; }

  void draw_point(const geo::Point& p);
  void draw_line(const geo::Point& p, const geo::Point& q);

  /// Paints every pixel `c` and empties the primitive log. The primitive
  /// counter is left alone.
  void clear(NamedColor c = NamedColor::white);

  [[nodiscard]] std::uint64_t primitive_count() const noexcept { return primitive_count_; }
  void reset_primitive_count() noexcept { primitive_count_ = 0; }

  /// Turning retention off drops the existing log and stops recording, which
  /// keeps very large drawings (deep dragon curves) cheap.
  void set_retain_primitives(bool on);
  [[nodiscard]] bool retains_primitives() const noexcept { return retain_; }
  [[nodiscard]] const std::vector<Primitive>& primitives() const noexcept { return log_; }

  /// Row 0 is the top row.
  [[nodiscard]] Rgb pixel(std::size_t col, std::size_t row) const;
  [[nodiscard]] std::span<const Rgb> pixels() const noexcept { return pixels_; }

  struct PixelPos {
    double col;
    double row;
  };
  [[nodiscard]] PixelPos to_pixel(const geo::Point& p) const;
  /// User units per pixel is the inverse; this is pixels per user unit.
  [[nodiscard]] double pixels_per_unit_x() const noexcept;
  [[nodiscard]] double pixels_per_unit_y() const noexcept;

private:
  void stamp(double col, double row, double radius, Rgb color) noexcept;
  void rasterize(PixelPos a, PixelPos b, Rgb color);
  void record(Primitive::Kind kind, const geo::Point& a, const geo::Point& b);

  std::size_t width_;
  std::size_t height_;
  Range x_scale_;
  Range y_scale_;
  double pen_radius_ = kDefaultPenRadius;
  NamedColor pen_color_ = NamedColor::black;
  std::vector<Rgb> pixels_;
  std::vector<Primitive> log_;
  bool retain_ = true;
  std::uint64_t primitive_count_ = 0;
};

enum class ImageFormat { ppm, svg };

/// Binary PPM: "P6\n{w} {h}\n255\n" then w*h RGB triples, top row first.
[[nodiscard]] std::string export_ppm(const Canvas& cv);

/// SVG 1.1 with one <line> or <circle> element per retained primitive, in
/// pixel coordinates.
[[nodiscard]] std::string export_svg(const Canvas& cv);

[[nodiscard]] std::string export_image(const Canvas& cv, ImageFormat format);

/// Picks the format from a file extension (".svg" -> svg, anything else ppm).
[[nodiscard]] ImageFormat format_for_path(const std::string& path);

void write_file(const std::string& path, const std::string& bytes);

inline constexpr int kOutlineChords = 360;

/// Strokes the periphery of `c` in c.color() as a closed polyline of `chords`
/// chords, each counted as a primitive. A circle smaller than one pixel is a
/// single point. Returns the number of primitives drawn.
std::size_t draw_circle_outline(Canvas& cv, const geo::Circle& c, int chords = kOutlineChords);

inline constexpr int kRadialDiameters = 180;

/// Paints the disc of `c` with 180 diameters at one-degree steps.
/// Returns 180.
std::size_t fill_circle_radial(Canvas& cv, const geo::Circle& c);

/// Paints the disc of `c` with `rings` outlines at radii R*k/rings, each a
/// closed polyline of `chords_per_ring` chords. Returns rings * chords.
std::size_t fill_circle_concentric(Canvas& cv, const geo::Circle& c, int rings,
                                   int chords_per_ring);

} // namespace figdraw::raster
