#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace figdraw::pic {

/// A rectangular grid of printable ASCII characters.
///
/// Every row has exactly width() cells; trailing spaces are real cells. The
/// height and width are tracked independently so that 0-wide pictures of any
/// height and 0-tall pictures of any width exist as identities for hjoin and
/// vjoin. Values are immutable once constructed.
class DiscretePic {
public:
  DiscretePic() = default;

  /// A height x width picture filled with `fill`.
  DiscretePic(std::size_t height, std::size_t width, char fill = ' ');

  /// Builds a picture from rows that must all have the same length.
  /// Throws DimensionError on ragged rows, UnsupportedCharError on any cell
  /// outside printable ASCII.
  static DiscretePic from_rows(std::vector<std::string> rows);

  /// A height-row picture of zero width.
  static DiscretePic empty_rows(std::size_t height);

  [[nodiscard]] std::size_t height() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] bool empty() const noexcept { return rows_.empty() || width_ == 0; }

  [[nodiscard]] const std::vector<std::string>& rows() const noexcept { return rows_; }
  [[nodiscard]] const std::string& row(std::size_t r) const { return rows_.at(r); }
  [[nodiscard]] char at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }

  /// Number of cells equal to `c`.
  [[nodiscard]] std::size_t count(char c) const noexcept;

  friend bool operator==(const DiscretePic&, const DiscretePic&) = default;

private:
  DiscretePic(std::vector<std::string> rows, std::size_t width) noexcept
      : rows_(std::move(rows)), width_(width) {}

  std::vector<std::string> rows_;
  std::size_t width_ = 0;
};

/// True for the characters a cell may hold (0x20..0x7e).
[[nodiscard]] bool is_cell_char(char c) noexcept;

[[nodiscard]] DiscretePic uniform_line(std::size_t len, char c);

/// Row r (1-based) of an h-row pyramid: (h-r) spaces, (2r-1) copies of c,
/// (h-r) spaces. The trailing segment makes every row a palindrome.
[[nodiscard]] DiscretePic pyramid_row(int h, int r, char c);
[[nodiscard]] DiscretePic pyramid(int h, char c);

[[nodiscard]] DiscretePic hjoin(const DiscretePic& a, const DiscretePic& b);
[[nodiscard]] DiscretePic vjoin(const DiscretePic& a, const DiscretePic& b);
[[nodiscard]] DiscretePic frame(const DiscretePic& p, char border);
[[nodiscard]] DiscretePic scale(const DiscretePic& p, int kx, int ky);

/// Paints `top` over `base` with its top-left corner at (at_row, at_col).
/// Cells of `top` equal to `transparent` and cells falling outside `base`
/// are ignored. The result always has base's dimensions.
[[nodiscard]] DiscretePic overlay(const DiscretePic& base, const DiscretePic& top, long at_row,
                                  long at_col, char transparent = ' ');

/// The part of `p` inside the h x w rectangle at (row, col). The rectangle
/// may hang over the edges; an empty intersection is a DimensionError.
[[nodiscard]] DiscretePic clip(const DiscretePic& p, long row, long col, std::size_t h,
                               std::size_t w);

[[nodiscard]] DiscretePic rotate180(const DiscretePic& p);

/// Grows `p` to h x w by appending `fill` cells on the right and bottom.
/// Shrinking is a DimensionError.
[[nodiscard]] DiscretePic pad_to(const DiscretePic& p, std::size_t h, std::size_t w,
                                 char fill = ' ');

/// Rows joined with LF, one LF after every row (including the last).
[[nodiscard]] std::string render_text(const DiscretePic& p);

/// Same as render_text with trailing spaces removed from each row.
[[nodiscard]] std::string render_trimmed(const DiscretePic& p);

/// Inverse of render_text. Every row must be LF-terminated and all rows must
/// have equal length.
[[nodiscard]] DiscretePic parse_text(std::string_view text);

/// Glyph metrics of the built-in banner font.
inline constexpr std::size_t kGlyphWidth = 5;
inline constexpr std::size_t kGlyphHeight = 7;

[[nodiscard]] bool has_glyph(char c) noexcept;

/// The 5x7 glyph for `c` ('#' ink on ' ' paper). Lowercase letters are not in
/// the font.
[[nodiscard]] DiscretePic glyph(char c);

/// Glyphs of `s` joined horizontally with one blank column between them.
[[nodiscard]] DiscretePic banner(std::string_view s);

} // namespace figdraw::pic
