#include "figdraw/color.hpp"

#include <array>
#include <cctype>

namespace figdraw {

namespace {

struct Entry {
  NamedColor color;
  std::string_view name;
  Rgb value;
};

constexpr std::array<Entry, 10> kColors{{
    {NamedColor::black, "BLACK", {0, 0, 0}},
    {NamedColor::white, "WHITE", {255, 255, 255}},
    {NamedColor::red, "RED", {255, 0, 0}},
    {NamedColor::green, "GREEN", {0, 255, 0}},
    {NamedColor::blue, "BLUE", {0, 0, 255}},
    {NamedColor::yellow, "YELLOW", {255, 255, 0}},
    {NamedColor::orange, "ORANGE", {255, 200, 0}},
    {NamedColor::magenta, "MAGENTA", {255, 0, 255}},
    {NamedColor::cyan, "CYAN", {0, 255, 255}},
    {NamedColor::gray, "GRAY", {128, 128, 128}},
}};

const Entry& entry(NamedColor c) noexcept { return kColors[static_cast<std::size_t>(c)]; }

} // namespace

Rgb rgb(NamedColor c) noexcept { return entry(c).value; }

std::string_view color_name(NamedColor c) noexcept { return entry(c).name; }

std::optional<NamedColor> parse_color(std::string_view name) noexcept {
  for (const auto& e : kColors) {
    if (e.name.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size() && same; ++i) {
      same = std::toupper(static_cast<unsigned char>(name[i])) == e.name[i];
    }
    if (same) return e.color;
  }
  return std::nullopt;
}

} // namespace figdraw
