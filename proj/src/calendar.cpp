#include "figdraw/calendar.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "figdraw/errors.hpp"

namespace figdraw::pic {

namespace {

constexpr std::array<std::string_view, 12> kMonthNames{
    "JANUARY", "FEBRUARY", "MARCH",     "APRIL",   "MAY",      "JUNE",
    "JULY",    "AUGUST",   "SEPTEMBER", "OCTOBER", "NOVEMBER", "DECEMBER"};

constexpr std::array<std::string_view, 7> kDayHeads{"Mo", "Tu", "We", "Th", "Fr", "Sa", "Su"};

constexpr std::size_t kCellWidth = 4;

void check_month(int month) {
  if (month < 1 || month > 12) {
    throw RangeError("month must be 1..12, got " + std::to_string(month));
  }
}

std::string right_aligned(std::string_view s) {
  std::string cell(kCellWidth - std::min(kCellWidth, s.size()), ' ');
  cell += s;
  return cell;
}

} // namespace

bool is_leap_year(int year) noexcept {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  check_month(month);
  constexpr std::array<int, 12> kDays{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[static_cast<std::size_t>(month - 1)];
}

Weekday weekday_of(int year, int month, int day) {
  check_month(month);
  if (day < 1 || day > days_in_month(year, month)) {
    throw RangeError("day " + std::to_string(day) + " outside month");
  }
  // January and February count as months 13 and 14 of the previous year.
  int m = month;
  int y = year;
  if (m < 3) {
    m += 12;
    y -= 1;
  }
  const int k = y % 100;
  const int j = y / 100;
  const int h = (day + (13 * (m + 1)) / 5 + k + k / 4 + j / 4 + 5 * j) % 7; // 0 = Saturday
  return static_cast<Weekday>((h + 5) % 7);
}

std::string_view month_name(int month) {
  check_month(month);
  return kMonthNames[static_cast<std::size_t>(month - 1)];
}

void validate(const CalendricSpec& spec) {
  check_month(spec.month);
  if (spec.year < kMinGregorianYear) {
    throw RangeError("year must be Gregorian (>= " + std::to_string(kMinGregorianYear) +
                     "), got " + std::to_string(spec.year));
  }
}

DiscretePic month_grid(const CalendricSpec& spec) {
  validate(spec);
  std::vector<std::string> rows;
  std::string head;
  for (auto d : kDayHeads) head += right_aligned(d);
  rows.push_back(std::move(head));

  const int offset = static_cast<int>(weekday_of(spec.year, spec.month, 1));
  const int days = days_in_month(spec.year, spec.month);
  const int weeks = (offset + days + 6) / 7;
  for (int w = 0; w < weeks; ++w) {
    std::string row;
    for (int d = 0; d < 7; ++d) {
      const int day = w * 7 + d - offset + 1;
      row += (day >= 1 && day <= days) ? right_aligned(std::to_string(day)) : right_aligned("");
    }
    rows.push_back(std::move(row));
  }
  return DiscretePic::from_rows(std::move(rows));
}

DiscretePic calendric_month(const CalendricSpec& spec, bool bold) {
  validate(spec);
  std::string title(month_name(spec.month));
  title += ' ';
  title += std::to_string(spec.year);
  auto head = banner(title);
  if (bold) head = scale(head, 2, 1);
  auto grid = month_grid(spec);

  const std::size_t width = std::max(head.width(), grid.width());
  head = pad_to(head, head.height(), width);
  grid = pad_to(grid, grid.height(), width);
  return vjoin(vjoin(head, DiscretePic(1, width)), grid);
}

} // namespace figdraw::pic
