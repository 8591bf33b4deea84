#include "doctest.h"
#include "figdraw/calendar.hpp"
#include "figdraw/errors.hpp"
#include "oracles.hpp"

using namespace figdraw;
using namespace figdraw::pic;

TEST_CASE("weekday of the first agrees with day counting, 1900-2100") {
  for (int y = 1900; y <= 2100; ++y) {
    for (int m = 1; m <= 12; ++m) {
      CHECK(static_cast<int>(weekday_of(y, m, 1)) == oracle::weekday_by_counting(y, m, 1));
      CHECK(days_in_month(y, m) == oracle::month_length(y, m));
    }
  }
}

TEST_CASE("known dates") {
  CHECK(weekday_of(1900, 1, 1) == Weekday::monday);
  CHECK(weekday_of(2019, 8, 1) == Weekday::thursday);
  CHECK(weekday_of(2000, 2, 29) == Weekday::tuesday);
  CHECK(weekday_of(2024, 12, 25) == Weekday::wednesday);
  CHECK(weekday_of(1583, 1, 1) == Weekday::saturday);
}

TEST_CASE("leap years") {
  CHECK(days_in_month(1900, 2) == 28);
  CHECK(days_in_month(2000, 2) == 29);
  CHECK(days_in_month(2020, 2) == 29);
  CHECK(days_in_month(2019, 2) == 28);
  CHECK_FALSE(is_leap_year(2100));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(validate({1582, 12}), RangeError);
  CHECK_THROWS_AS(validate({2019, 0}), RangeError);
  CHECK_THROWS_AS(validate({2019, 13}), RangeError);
  CHECK_NOTHROW(validate({1583, 1}));
  CHECK_THROWS_AS((void)weekday_of(2019, 2, 29), RangeError);
  CHECK_THROWS_AS((void)month_name(13), RangeError);
  CHECK_THROWS_AS((void)calendric_month({2019, 13}), RangeError);
}

TEST_CASE("month names") {
  CHECK(month_name(1) == "JANUARY");
  CHECK(month_name(8) == "AUGUST");
  CHECK(month_name(12) == "DECEMBER");
}

TEST_CASE("August 2019 matches the golden calendar") {
  const auto golden = oracle::read_file(oracle::test_dir() / "golden" / "calendar_2019_08.txt");
  CHECK(render_text(calendric_month({2019, 8})) == golden);
}

TEST_CASE("grid lists every day once, under its weekday column") {
  for (int y : {1999, 2019, 2020, 2021}) {
    for (int m = 1; m <= 12; ++m) {
      const auto g = month_grid({y, m});
      const auto offset = oracle::weekday_by_counting(y, m, 1);
      const auto days = oracle::month_length(y, m);
      REQUIRE(g.height() == 1 + static_cast<std::size_t>((offset + days + 6) / 7));
      for (int d = 1; d <= days; ++d) {
        const int cell = offset + d - 1;
        const auto& row = g.row(1 + static_cast<std::size_t>(cell / 7));
        const auto text = row.substr(static_cast<std::size_t>(cell % 7) * 4, 4);
        const auto expect = std::to_string(d);
        CHECK(text == std::string(4 - expect.size(), ' ') + expect);
      }
    }
  }
}

TEST_CASE("bold banner is wider, grid unchanged") {
  const auto plain = calendric_month({2019, 8});
  const auto bold = calendric_month({2019, 8}, true);
  CHECK(bold.width() > plain.width());
  CHECK(bold.height() == plain.height());
  const auto grid = month_grid({2019, 8});
  const auto tail = clip(bold, static_cast<long>(bold.height() - grid.height()), 0, grid.height(),
                         grid.width());
  CHECK(tail == grid);
}
