#include "figdraw/discrete_pic.hpp"

#include <algorithm>
#include <string>

#include "figdraw/errors.hpp"

namespace figdraw::pic {

namespace {

void check_cells(std::string_view row) {
  for (char c : row) {
    if (!is_cell_char(c)) {
      throw UnsupportedCharError("picture cell must be printable ASCII, got byte " +
                                 std::to_string(static_cast<unsigned char>(c)));
    }
  }
}

std::string dims(const DiscretePic& p) {
  return std::to_string(p.height()) + "x" + std::to_string(p.width());
}

} // namespace

bool is_cell_char(char c) noexcept { return c >= 0x20 && c <= 0x7e; }

DiscretePic::DiscretePic(std::size_t height, std::size_t width, char fill)
    : rows_(height, std::string(width, fill)), width_(width) {
  check_cells(std::string_view(&fill, 1));
}

DiscretePic DiscretePic::from_rows(std::vector<std::string> rows) {
  const std::size_t w = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != w) {
      throw DimensionError("ragged picture: row of width " + std::to_string(r.size()) +
                           " in a picture of width " + std::to_string(w));
    }
    check_cells(r);
  }
  return DiscretePic(std::move(rows), w);
}

DiscretePic DiscretePic::empty_rows(std::size_t height) {
  return DiscretePic(std::vector<std::string>(height), 0);
}

std::size_t DiscretePic::count(char c) const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += static_cast<std::size_t>(std::ranges::count(r, c));
  return n;
}

DiscretePic uniform_line(std::size_t len, char c) { return DiscretePic(1, len, c); }

DiscretePic pyramid_row(int h, int r, char c) {
  if (h < 1 || r < 1 || r > h) {
    throw RangeError("pyramid row " + std::to_string(r) + " outside 1.." + std::to_string(h));
  }
  const auto side = static_cast<std::size_t>(h - r);
  const auto ink = static_cast<std::size_t>(2 * r - 1);
  return hjoin(hjoin(uniform_line(side, ' '), uniform_line(ink, c)), uniform_line(side, ' '));
}

DiscretePic pyramid(int h, char c) {
  if (h < 1) throw RangeError("pyramid height must be at least 1, got " + std::to_string(h));
  DiscretePic out(0, static_cast<std::size_t>(2 * h - 1));
  for (int r = 1; r <= h; ++r) out = vjoin(out, pyramid_row(h, r, c));
  return out;
}

DiscretePic hjoin(const DiscretePic& a, const DiscretePic& b) {
  if (a.height() != b.height()) {
    throw DimensionError("hjoin needs equal heights: " + dims(a) + " vs " + dims(b));
  }
  std::vector<std::string> rows = a.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] += b.row(i);
  if (rows.empty()) return DiscretePic(0, a.width() + b.width());
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic vjoin(const DiscretePic& a, const DiscretePic& b) {
  if (a.width() != b.width()) {
    throw DimensionError("vjoin needs equal widths: " + dims(a) + " vs " + dims(b));
  }
  if (a.height() + b.height() == 0) return DiscretePic(0, a.width());
  std::vector<std::string> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic frame(const DiscretePic& p, char border) {
  const std::string edge(p.width() + 2, border);
  std::vector<std::string> rows;
  rows.reserve(p.height() + 2);
  rows.push_back(edge);
  for (const auto& r : p.rows()) rows.push_back(border + r + border);
  rows.push_back(edge);
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic scale(const DiscretePic& p, int kx, int ky) {
  if (kx < 1 || ky < 1) {
    throw RangeError("scale factors must be at least 1, got " + std::to_string(kx) + "," +
                     std::to_string(ky));
  }
  const auto sx = static_cast<std::size_t>(kx);
  const auto sy = static_cast<std::size_t>(ky);
  if (p.height() == 0) return DiscretePic(0, p.width() * sx);
  if (p.width() == 0) return DiscretePic::empty_rows(p.height() * sy);
  std::vector<std::string> rows;
  rows.reserve(p.height() * sy);
  for (const auto& r : p.rows()) {
    std::string wide;
    wide.reserve(r.size() * sx);
    for (char c : r) wide.append(sx, c);
    for (std::size_t k = 0; k < sy; ++k) rows.push_back(wide);
  }
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic overlay(const DiscretePic& base, const DiscretePic& top, long at_row, long at_col,
                    char transparent) {
  std::vector<std::string> rows = base.rows();
  const auto bh = static_cast<long>(base.height());
  const auto bw = static_cast<long>(base.width());
  for (long r = 0; r < static_cast<long>(top.height()); ++r) {
    const long br = at_row + r;
    if (br < 0 || br >= bh) continue;
    const auto& src = top.row(static_cast<std::size_t>(r));
    for (long c = 0; c < static_cast<long>(top.width()); ++c) {
      const long bc = at_col + c;
      if (bc < 0 || bc >= bw) continue;
      const char cell = src[static_cast<std::size_t>(c)];
      if (cell != transparent) rows[static_cast<std::size_t>(br)][static_cast<std::size_t>(bc)] = cell;
    }
  }
  if (base.height() == 0) return base;
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic clip(const DiscretePic& p, long row, long col, std::size_t h, std::size_t w) {
  const long r0 = std::max(row, 0L);
  const long c0 = std::max(col, 0L);
  const long r1 = std::min(row + static_cast<long>(h), static_cast<long>(p.height()));
  const long c1 = std::min(col + static_cast<long>(w), static_cast<long>(p.width()));
  if (r0 >= r1 || c0 >= c1) {
    throw DimensionError("clip rectangle (" + std::to_string(row) + "," + std::to_string(col) +
                         ") " + std::to_string(h) + "x" + std::to_string(w) +
                         " misses picture " + dims(p));
  }
  std::vector<std::string> rows;
  for (long r = r0; r < r1; ++r) {
    rows.push_back(p.row(static_cast<std::size_t>(r))
                       .substr(static_cast<std::size_t>(c0), static_cast<std::size_t>(c1 - c0)));
  }
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic rotate180(const DiscretePic& p) {
  if (p.width() == 0) return p;
  std::vector<std::string> rows(p.rows().rbegin(), p.rows().rend());
  for (auto& r : rows) std::ranges::reverse(r);
  if (rows.empty()) return p;
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic pad_to(const DiscretePic& p, std::size_t h, std::size_t w, char fill) {
  if (h < p.height() || w < p.width()) {
    throw DimensionError("pad_to cannot shrink " + dims(p) + " to " + std::to_string(h) + "x" +
                         std::to_string(w));
  }
  DiscretePic out(h, w, fill);
  return overlay(out, p, 0, 0, '\0');
}

std::string render_text(const DiscretePic& p) {
  std::string out;
  out.reserve(p.height() * (p.width() + 1));
  for (const auto& r : p.rows()) {
    out += r;
    out += '\n';
  }
  return out;
}

std::string render_trimmed(const DiscretePic& p) {
  std::string out;
  for (const auto& r : p.rows()) {
    const auto end = r.find_last_not_of(' ');
    if (end != std::string::npos) out.append(r, 0, end + 1);
    out += '\n';
  }
  return out;
}

DiscretePic parse_text(std::string_view text) {
  std::vector<std::string> rows;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      throw DimensionError("picture text must end every row with a line break");
    }
    rows.emplace_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic banner(std::string_view s) {
  auto out = DiscretePic::empty_rows(kGlyphHeight);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out = hjoin(out, DiscretePic(kGlyphHeight, 1));
    out = hjoin(out, glyph(s[i]));
  }
  return out;
}

} // namespace figdraw::pic
