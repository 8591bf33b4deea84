#include "figdraw/canvas.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "figdraw/errors.hpp"

namespace figdraw::raster {

namespace {

bool degenerate(Range r) noexcept {
  return !std::isfinite(r.min) || !std::isfinite(r.max) || !(r.max > r.min);
}

// Liang-Barsky clip of the parametric segment a + t(b - a), t in [0, 1],
// against [lo_c, hi_c] x [lo_r, hi_r]. Returns false when nothing survives.
bool clip_segment(Canvas::PixelPos& a, Canvas::PixelPos& b, double lo_c, double hi_c,
                  double lo_r, double hi_r) noexcept {
  const double dc = b.col - a.col;
  const double dr = b.row - a.row;
  double t0 = 0.0;
  double t1 = 1.0;
  const auto edge = [&](double p, double q) {
    if (p == 0.0) return q >= 0.0;
    const double t = q / p;
    if (p < 0.0) {
      if (t > t1) return false;
      t0 = std::max(t0, t);
    } else {
      if (t < t0) return false;
      t1 = std::min(t1, t);
    }
    return true;
  };
  if (!edge(-dc, a.col - lo_c) || !edge(dc, hi_c - a.col) || !edge(-dr, a.row - lo_r) ||
      !edge(dr, hi_r - a.row)) {
    return false;
  }
  const Canvas::PixelPos start{a.col + t0 * dc, a.row + t0 * dr};
  const Canvas::PixelPos end{a.col + t1 * dc, a.row + t1 * dr};
  a = start;
  b = end;
  return true;
}

void append_number(std::string& out, double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  std::string_view s(buf, static_cast<std::size_t>(end - buf));
  // 12.500 -> 12.5, 3.000 -> 3
  while (s.back() == '0') s.remove_suffix(1);
  if (s.back() == '.') s.remove_suffix(1);
  if (s == "-0") s = "0";
  out += s;
}

std::string svg_color(NamedColor c) {
  const auto v = rgb(c);
  return "rgb(" + std::to_string(v.r) + "," + std::to_string(v.g) + "," + std::to_string(v.b) +
         ")";
}

} // namespace

Canvas::Canvas(std::size_t width, std::size_t height, Range x_scale, Range y_scale)
    : width_(width), height_(height), x_scale_(x_scale), y_scale_(y_scale) {
  if (width < 1 || height < 1) throw RangeError("canvas dimensions must be at least 1x1");
  if (degenerate(x_scale) || degenerate(y_scale)) {
    throw RangeError("canvas scale ranges must be finite with max > min");
  }
  pixels_.assign(width * height, rgb(NamedColor::white));
}

void Canvas::set_pen_radius(double r) {
  if (!std::isfinite(r) || r < 0) throw RangeError("pen radius must be finite and >= 0");
  pen_radius_ = r;
}

double Canvas::stroke_radius_px() const noexcept {
  return pen_radius_ * static_cast<double>(std::min(width_, height_));
}

double Canvas::pixels_per_unit_x() const noexcept {
  return static_cast<double>(width_ - 1) / (x_scale_.max - x_scale_.min);
}

double Canvas::pixels_per_unit_y() const noexcept {
  return static_cast<double>(height_ - 1) / (y_scale_.max - y_scale_.min);
}

Canvas::PixelPos Canvas::to_pixel(const geo::Point& p) const {
  const PixelPos out{(p.x() - x_scale_.min) * pixels_per_unit_x(),
                     (y_scale_.max - p.y()) * pixels_per_unit_y()};
  if (!std::isfinite(out.col) || !std::isfinite(out.row)) {
    throw NumericError("coordinate overflows the pixel grid");
  }
  return out;
}

void Canvas::record(Primitive::Kind kind, const geo::Point& a, const geo::Point& b) {
  ++primitive_count_;
  if (retain_) log_.push_back({kind, a, b, pen_color_, pen_radius_});
}

void Canvas::draw_point(const geo::Point& p) {
  const auto px = to_pixel(p);
  record(Primitive::Kind::point, p, p);
  stamp(px.col, px.row, stroke_radius_px(), rgb(pen_color_));
}

void Canvas::draw_line(const geo::Point& p, const geo::Point& q) {
  const auto a = to_pixel(p);
  const auto b = to_pixel(q);
  record(Primitive::Kind::line, p, q);
  rasterize(a, b, rgb(pen_color_));
}

void Canvas::clear(NamedColor c) {
  std::ranges::fill(pixels_, rgb(c));
  log_.clear();
}

void Canvas::set_retain_primitives(bool on) {
  retain_ = on;
  if (!on) {
    log_.clear();
    log_.shrink_to_fit();
  }
}

Rgb Canvas::pixel(std::size_t col, std::size_t row) const {
  if (col >= width_ || row >= height_) throw RangeError("pixel outside canvas");
  return pixels_[row * width_ + col];
}

void Canvas::stamp(double col, double row, double radius, Rgb color) noexcept {
  const auto w = static_cast<long>(width_);
  const auto h = static_cast<long>(height_);
  // The nearest pixel is always inked so hairline pens stay visible.
  const long nc = std::lround(col);
  const long nr = std::lround(row);
  if (nc >= 0 && nc < w && nr >= 0 && nr < h) {
    pixels_[static_cast<std::size_t>(nr * w + nc)] = color;
  }
  if (radius <= 0) return;
  const long c0 = std::max(0L, static_cast<long>(std::ceil(col - radius)));
  const long c1 = std::min(w - 1, static_cast<long>(std::floor(col + radius)));
  const long r0 = std::max(0L, static_cast<long>(std::ceil(row - radius)));
  const long r1 = std::min(h - 1, static_cast<long>(std::floor(row + radius)));
  const double rr = radius * radius;
  for (long r = r0; r <= r1; ++r) {
    const double dr = static_cast<double>(r) - row;
    for (long c = c0; c <= c1; ++c) {
      const double dc = static_cast<double>(c) - col;
      if (dc * dc + dr * dr <= rr) pixels_[static_cast<std::size_t>(r * w + c)] = color;
    }
  }
}

void Canvas::rasterize(PixelPos a, PixelPos b, Rgb color) {
  const double radius = stroke_radius_px();
  const double margin = radius + 1.0;
  if (!clip_segment(a, b, -margin, static_cast<double>(width_ - 1) + margin, -margin,
                    static_cast<double>(height_ - 1) + margin)) {
    return;
  }
  const double dc = b.col - a.col;
  const double dr = b.row - a.row;
  const auto steps = static_cast<long>(std::ceil(std::max(std::abs(dc), std::abs(dr))));
  if (steps == 0) {
    stamp(a.col, a.row, radius, color);
    return;
  }
  for (long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(steps);
    stamp(a.col + t * dc, a.row + t * dr, radius, color);
  }
}

std::string export_ppm(const Canvas& cv) {
  std::string out = "P6\n" + std::to_string(cv.width()) + " " + std::to_string(cv.height()) +
                    "\n255\n";
  out.reserve(out.size() + cv.pixels().size() * 3);
  for (const auto& px : cv.pixels()) {
    out += static_cast<char>(px.r);
    out += static_cast<char>(px.g);
    out += static_cast<char>(px.b);
  }
  return out;
}

std::string export_svg(const Canvas& cv) {
  const double scale_px = static_cast<double>(std::min(cv.width(), cv.height()));
  const auto w = std::to_string(cv.width());
  const auto h = std::to_string(cv.height());
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
         "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  for (const auto& prim : cv.primitives()) {
    // Pixel i spans [i, i + 1] in SVG space, so centres sit at i + 0.5.
    const auto a = cv.to_pixel(prim.a);
    const auto b = cv.to_pixel(prim.b);
    if (prim.kind == Primitive::Kind::line) {
      out += "<line x1=\"";
      append_number(out, a.col + 0.5);
      out += "\" y1=\"";
      append_number(out, a.row + 0.5);
      out += "\" x2=\"";
      append_number(out, b.col + 0.5);
      out += "\" y2=\"";
      append_number(out, b.row + 0.5);
      out += "\" stroke=\"" + svg_color(prim.color) + "\" stroke-width=\"";
      append_number(out, 2 * prim.pen_radius * scale_px);
      out += "\" stroke-linecap=\"round\"/>\n";
    } else {
      out += "<circle cx=\"";
      append_number(out, a.col + 0.5);
      out += "\" cy=\"";
      append_number(out, a.row + 0.5);
      out += "\" r=\"";
      append_number(out, std::max(prim.pen_radius * scale_px, 0.5));
      out += "\" fill=\"" + svg_color(prim.color) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string export_image(const Canvas& cv, ImageFormat format) {
  return format == ImageFormat::svg ? export_svg(cv) : export_ppm(cv);
}

ImageFormat format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == "svg") return ImageFormat::svg;
  }
  return ImageFormat::ppm;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path + " for writing");
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error("failed writing " + path);
}

} // namespace figdraw::raster
