#pragma once

// Independent reference implementations used to check the library. None of
// these call into figdraw.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::filesystem::path test_dir() { return FIGDRAW_TEST_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Column slicer: greedy lines, cut into chunks of h, then read row by row.
inline std::string tabulate(const std::string& text, std::size_t w, std::size_t h,
                            std::size_t gap) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string word;
  std::string cur;
  bool open = false;
  while (in >> word) {
    if (open && cur.size() + 1 + word.size() <= w) {
      cur += ' ' + word;
      continue;
    }
    if (open) lines.push_back(cur);
    cur = word;
    open = true;
  }
  if (open) lines.push_back(cur);

  const std::size_t cols = (lines.size() + h - 1) / h;
  std::string out;
  for (std::size_t r = 0; r < h && r < lines.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t i = c * h + r;
      if (i >= lines.size()) break;
      std::string cell = lines[i];
      if (cell.size() < w + gap) cell.resize(w + gap, ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

inline bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

inline int month_length(int y, int m) {
  static constexpr int kLen[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return kLen[m - 1] + (m == 2 && leap(y) ? 1 : 0);
}

// Days elapsed since Monday 1 January 1900, mod 7. 0 = Monday.
inline int weekday_by_counting(int y, int m, int d) {
  long days = 0;
  for (int yy = 1900; yy < y; ++yy) days += leap(yy) ? 366 : 365;
  for (int mm = 1; mm < m; ++mm) days += month_length(y, mm);
  days += d - 1;
  return static_cast<int>(days % 7);
}

inline std::uint64_t fib_value(int n) {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (int i = 0; i < n; ++i) a = std::exchange(b, a + b);
  return a;
}

// Counts invocations of the naive two-branch recursion.
struct FibCallCounter {
  std::uint64_t calls = 0;
  std::uint64_t operator()(int n) {
    ++calls;
    return n < 2 ? static_cast<std::uint64_t>(n) : (*this)(n - 1) + (*this)(n - 2);
  }
};

// Pixels whose centres map into the closed disc, using the canvas mapping
// col = (x - xmin)(W-1)/(xmax-xmin), row = (ymax - y)(H-1)/(ymax-ymin).
inline std::vector<std::pair<std::size_t, std::size_t>>
disc_pixels(std::size_t W, std::size_t H, double xmin, double xmax, double ymin, double ymax,
            double cx, double cy, double r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t row = 0; row < H; ++row) {
    const double y = ymax - static_cast<double>(row) * (ymax - ymin) / static_cast<double>(H - 1);
    for (std::size_t col = 0; col < W; ++col) {
      const double x = xmin + static_cast<double>(col) * (xmax - xmin) / static_cast<double>(W - 1);
      if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) out.emplace_back(col, row);
    }
  }
  return out;
}

// Re-runs the four-transform recursion with a tally of every intermediate
// point produced by a scale, rotate or shift.
struct DragonTally {
  struct P {
    double x;
    double y;
  };
  struct Seg {
    P a;
    P b;
  };

  std::uint64_t created = 0;
  bool keep = false;
  std::vector<Seg> segments;

  P scale(P p, double a, double b) {
    ++created;
    return {p.x * a, p.y * b};
  }
  P rotate(P p, double deg) {
    ++created;
    const double t = deg * std::numbers::pi / 180;
    return {p.x * std::cos(t) - p.y * std::sin(t), p.x * std::sin(t) + p.y * std::cos(t)};
  }
  P shift(P p, double a, double b) {
    ++created;
    return {p.x + a, p.y + b};
  }

  void draw(int n, P p1, P p2) {
    if (n == 0) {
      if (keep) segments.push_back({p1, p2});
      return;
    }
    P a = rotate(scale(p1, 0.5, 0.5), 90);
    P b = rotate(scale(p2, 0.5, 0.5), 90);
    draw(n - 1, a, b);
    a = shift(rotate(scale(p1, 0.5, 0.5), 180), 0.5, 0.5);
    b = shift(rotate(scale(p2, 0.5, 0.5), 180), 0.5, 0.5);
    draw(n - 1, a, b);
    a = shift(rotate(scale(p1, 0.5, 0.5), -90), 0.5, 0.5);
    b = shift(rotate(scale(p2, 0.5, 0.5), -90), 0.5, 0.5);
    draw(n - 1, a, b);
    a = shift(rotate(scale(p1, 0.5, 0.5), 180), 1.0, 0.0);
    b = shift(rotate(scale(p2, 0.5, 0.5), 180), 1.0, 0.0);
    draw(n - 1, a, b);
  }
};

} // namespace oracle
