#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "figdraw/bench.hpp"
#include "figdraw/discrete_pic.hpp"
#include "figdraw/errors.hpp"

namespace figdraw::bench {

namespace {

constexpr std::array<NamedColor, 8> kPalette{NamedColor::blue,  NamedColor::red,
                                              NamedColor::green, NamedColor::orange,
                                              NamedColor::magenta, NamedColor::cyan,
                                              NamedColor::gray,  NamedColor::black};

constexpr int kTicks = 5;

// Banner font covers A-Z, 0-9 and space only.
std::string legend_text(std::string_view method) {
  std::string s;
  for (char c : method) {
    const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    s += pic::has_glyph(up) ? up : ' ';
  }
  return s;
}

} // namespace

NamedColor series_color(std::size_t i) noexcept { return kPalette[i % kPalette.size()]; }

raster::Canvas plot_series(const SampleTable& table, std::size_t pixel_w, std::size_t pixel_h,
                           PlotFrame* frame_out) {
  if (table.empty()) throw RangeError("cannot plot an empty table");
  const double w = static_cast<double>(pixel_w);
  const double h = static_cast<double>(pixel_h);
  // User units are pixels with y up.
  raster::Canvas cv(pixel_w, pixel_h, {0.0, std::max(w - 1, 1.0)}, {0.0, std::max(h - 1, 1.0)});

  const auto methods = table.methods();
  const double glyph_cell = std::max(1.0, std::floor(std::min(w, h) / 240));
  const double legend_h = static_cast<double>(methods.size()) *
                          (static_cast<double>(pic::kGlyphHeight) + 2) * glyph_cell;

  PlotFrame f{};
  f.left = std::floor(w * 0.12);
  f.bottom = std::floor(h * 0.10);
  f.right = std::floor(w * 0.95);
  f.top = std::floor(h * 0.95 - legend_h);
  if (f.top <= f.bottom) f.top = std::floor(h * 0.95);

  double x_min = table.rows().front().x;
  double x_max = x_min;
  double v_max = 0;
  for (const auto& r : table.rows()) {
    x_min = std::min(x_min, r.x);
    x_max = std::max(x_max, r.x);
    v_max = std::max(v_max, r.value);
  }
  if (x_max == x_min) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  f.x_min = x_min;
  f.x_max = x_max;
  f.y_max = v_max > 0 ? 1.05 * v_max : 1.0;

  const auto map = [&f](double x, double v) {
    return geo::Point(f.left + (x - f.x_min) / (f.x_max - f.x_min) * (f.right - f.left),
                      f.bottom + v / f.y_max * (f.top - f.bottom));
  };

  cv.set_pen_color(NamedColor::black);
  cv.draw_line({f.left, f.bottom}, {f.right, f.bottom});
  cv.draw_line({f.left, f.bottom}, {f.left, f.top});
  const double tick = std::max(2.0, std::floor(std::min(w, h) / 100));
  for (int i = 0; i <= kTicks; ++i) {
    const double tx = f.left + (f.right - f.left) * i / kTicks;
    const double ty = f.bottom + (f.top - f.bottom) * i / kTicks;
    cv.draw_line({tx, f.bottom}, {tx, f.bottom - tick});
    cv.draw_line({f.left, ty}, {f.left - tick, ty});
  }

  for (std::size_t m = 0; m < methods.size(); ++m) {
    cv.set_pen_color(series_color(m));
    const auto pts = table.series(methods[m]);
    if (pts.size() == 1) {
      cv.draw_point(map(pts[0].x, pts[0].value));
      continue;
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
      cv.draw_line(map(pts[i - 1].x, pts[i - 1].value), map(pts[i].x, pts[i].value));
    }
  }

  // Legend: one banner line per method, top-left of the plot area, ink
  // cells plotted as points.
  const auto saved_pen = cv.pen_radius();
  cv.set_pen_radius(0.0);
  double row_top = h - 2 - glyph_cell;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    cv.set_pen_color(series_color(m));
    const auto text = pic::banner(legend_text(methods[m]));
    for (std::size_t r = 0; r < text.height(); ++r) {
      for (std::size_t c = 0; c < text.width(); ++c) {
        if (text.at(r, c) == ' ') continue;
        const double px = f.left + 2 + static_cast<double>(c) * glyph_cell;
        const double py = row_top - static_cast<double>(r) * glyph_cell;
        for (double dy = 0; dy < glyph_cell; ++dy) {
          for (double dx = 0; dx < glyph_cell; ++dx) cv.draw_point({px + dx, py - dy});
        }
      }
    }
    row_top -= (static_cast<double>(pic::kGlyphHeight) + 2) * glyph_cell;
  }
  cv.set_pen_radius(saved_pen);

  if (frame_out != nullptr) *frame_out = f;
  return cv;
}

} // namespace figdraw::bench
