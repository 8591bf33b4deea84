#include "figdraw/text_layout.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "figdraw/errors.hpp"

namespace figdraw::text {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
}

std::size_t longest_line(std::string_view s) {
  std::size_t n = 0;
  for (auto line : split_lines(s)) n = std::max(n, line.size());
  return n;
}

template <class PadLine>
TextBlock map_lines(const TextBlock& block, std::size_t width, const char* what, PadLine pad) {
  const auto widest = longest_line(block.content());
  if (widest > width) {
    throw RangeError(std::string(what) + " width " + std::to_string(width) +
                     " is smaller than the longest line (" + std::to_string(widest) + ")");
  }
  std::string out;
  bool first = true;
  for (auto line : split_lines(block.content())) {
    if (!first) out += '\n';
    first = false;
    out += pad(line, width - line.size());
  }
  return TextBlock(std::move(out));
}

} // namespace

std::vector<std::string> split_words(const TextBlock& block) {
  std::vector<std::string> words;
  std::string word;
  for (char c : block.content()) {
    if (is_word_space(c)) {
      if (!word.empty()) words.push_back(std::exchange(word, {}));
    } else {
      word += c;
    }
  }
  if (!word.empty()) words.push_back(std::move(word));
  return words;
}

std::string fill_line(std::string line, std::size_t width) {
  if (line.size() < width) line.append(width - line.size(), ' ');
  return line;
}

std::vector<std::string> fill_lines(const std::vector<std::string>& words, std::size_t width) {
  std::vector<std::string> lines;
  std::optional<std::string> line;
  for (const auto& word : words) {
    if (!line) {
      line = word;
    } else if (line->size() + 1 + word.size() <= width) {
      *line += ' ';
      *line += word;
    } else {
      lines.push_back(std::move(*line));
      line = word;
    }
  }
  if (line) lines.push_back(std::move(*line));
  return lines;
}

std::string tabulate(const TextBlock& block, const TabulationParams& params, bool force) {
  if (params.width < 1 || params.height < 1) {
    throw RangeError("column width and height must be at least 1");
  }
  const auto words = split_words(block);
  if (!force) {
    for (const auto& w : words) {
      if (w.size() > params.width) {
        throw OverflowError("word \"" + w + "\" is longer than the column width " +
                            std::to_string(params.width));
      }
    }
  }

  // Row strings accumulate one padded line per column; the row index wraps
  // back to 0 each time a column fills up.
  std::vector<std::string> rows(params.height);
  std::size_t row = 0;
  for (auto& line : fill_lines(words, params.width)) {
    if (row == params.height) row = 0;
    rows[row] += fill_line(std::move(line), params.width + params.gap);
    ++row;
  }

  std::string out;
  for (const auto& r : rows) {
    if (!r.empty()) {
      out += r;
      out += '\n';
    }
  }
  return out;
}

TextBlock restyle(const TextBlock& block, const Style& style) {
  return std::visit(
      overloaded{
          [&](const Uppercase&) {
            std::string s = block.content();
            for (auto& c : s) {
              if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
            }
            return TextBlock(std::move(s));
          },
          [&](const Center& c) {
            return map_lines(block, c.width, "center", [](std::string_view line, std::size_t slack) {
              const auto left = slack / 2;
              return std::string(left, ' ') + std::string(line) + std::string(slack - left, ' ');
            });
          },
          [&](const RightJustify& r) {
            return map_lines(block, r.width, "right-justify",
                             [](std::string_view line, std::size_t slack) {
                               return std::string(slack, ' ') + std::string(line);
                             });
          },
      },
      style);
}

} // namespace figdraw::text
