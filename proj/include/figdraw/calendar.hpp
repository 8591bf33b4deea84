#pragma once

#include <string_view>

#include "figdraw/discrete_pic.hpp"

namespace figdraw::pic {

/// Earliest year accepted: the first full Gregorian year.
inline constexpr int kMinGregorianYear = 1583;

struct CalendricSpec {
  int year = 2019;
  int month = 8; // 1..12
};

enum class Weekday { monday = 0, tuesday, wednesday, thursday, friday, saturday, sunday };

[[nodiscard]] bool is_leap_year(int year) noexcept;
[[nodiscard]] int days_in_month(int year, int month);

/// Day of the week of year-month-day by Zeller's congruence.
[[nodiscard]] Weekday weekday_of(int year, int month, int day);

[[nodiscard]] std::string_view month_name(int month);

/// Throws RangeError unless the year is Gregorian and the month is 1..12.
void validate(const CalendricSpec& spec);

/// Month-name and year banner stacked over a Monday-first day grid.
/// With `bold` the banner glyphs are doubled horizontally.
[[nodiscard]] DiscretePic calendric_month(const CalendricSpec& spec, bool bold = false);

/// The day grid alone: a header row "Mo Tu ..." and one row per week, each
/// day right-aligned in a 4-character cell.
[[nodiscard]] DiscretePic month_grid(const CalendricSpec& spec);

} // namespace figdraw::pic
