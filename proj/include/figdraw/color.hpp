#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace figdraw {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Pen colors. The RGB value of each name is fixed at build time.
enum class NamedColor { black, white, red, green, blue, yellow, orange, magenta, cyan, gray };

[[nodiscard]] Rgb rgb(NamedColor c) noexcept;

/// Upper-case name as accepted on the command line ("BLACK", "RED", ...).
[[nodiscard]] std::string_view color_name(NamedColor c) noexcept;

/// Case-insensitive lookup of a color name.
[[nodiscard]] std::optional<NamedColor> parse_color(std::string_view name) noexcept;

} // namespace figdraw
