#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace figdraw::text {

/// Arbitrary text content. Operations never mutate a block; restyle returns a
/// new one.
class TextBlock {
public:
  TextBlock() = default;
  explicit TextBlock(std::string content) : content_(std::move(content)) {}

  [[nodiscard]] const std::string& content() const noexcept { return content_; }

  friend bool operator==(const TextBlock&, const TextBlock&) = default;

private:
  std::string content_;
};

struct TabulationParams {
  std::size_t width = 20;  // characters per column line
  std::size_t height = 20; // lines per column
  std::size_t gap = 2;     // spaces after each column line
};

/// Word separators: space, tab and LF only.
[[nodiscard]] constexpr bool is_word_space(char c) noexcept {
  return c == ' ' || c == '\n' || c == '\t';
}

[[nodiscard]] std::vector<std::string> split_words(const TextBlock& block);

/// Pads `line` with trailing spaces up to `width`; longer lines are returned
/// unchanged.
[[nodiscard]] std::string fill_line(std::string line, std::size_t width);

/// Greedy first-fit line filling: a word joins the open line while
/// `line + ' ' + word` fits in params.width. Committed lines are dealt
/// row-major into columns of params.height lines, each padded to
/// width + gap, and the non-empty rows are emitted LF-terminated.
///
/// A word longer than params.width raises OverflowError naming it, unless
/// `force` is set, in which case the word gets an over-wide line of its own
/// exactly as the original student program does.
[[nodiscard]] std::string tabulate(const TextBlock& block, const TabulationParams& params,
                                   bool force = false);

/// The committed lines of the greedy fill, before column distribution.
[[nodiscard]] std::vector<std::string> fill_lines(const std::vector<std::string>& words,
                                                  std::size_t width);

struct Uppercase {};
struct Center {
  std::size_t width;
};
struct RightJustify {
  std::size_t width;
};
using Style = std::variant<Uppercase, Center, RightJustify>;

/// Per-line restyling. Lines are the LF-separated pieces of the content.
/// Center puts floor((width - len) / 2) spaces on the left and the rest on
/// the right; RightJustify pads on the left only. A line wider than the
/// requested width is a RangeError.
[[nodiscard]] TextBlock restyle(const TextBlock& block, const Style& style);

} // namespace figdraw::text
