#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figdraw/canvas.hpp"

namespace figdraw::bench {

// ---------------------------------------------------------------------------
// Fibonacci strategies

enum class FibStrategy { stack_recursive, tail_recursive, iterative };

/// fib(0) = 0, fib(1) = 1. fib(92) is the largest term that fits in 64 bits.
inline constexpr int kMaxFibIndex = 92;

struct FibResult {
  int n;
  std::uint64_t value;
  /// Function invocations for the recursive strategies, loop iterations for
  /// the iterative one.
  std::uint64_t op_count;
};

/// Invocation counts: stack_recursive makes 2*fib(n+1) - 1 calls,
/// tail_recursive makes n calls for n >= 1 (one for n = 0), iterative runs
/// max(n - 1, 0) loop iterations. Throws RangeError outside 0..92.
[[nodiscard]] FibResult fibonacci(int n, FibStrategy strategy);

[[nodiscard]] std::string_view strategy_name(FibStrategy s) noexcept;

// ---------------------------------------------------------------------------
// Sample tables

enum class Unit { seconds, count };

[[nodiscard]] std::string_view unit_name(Unit u) noexcept;

struct Sample {
  double x;
  std::string method;
  double value;
  Unit unit;
  friend bool operator==(const Sample&, const Sample&) = default;
};

/// Rows of (x, method, value, unit). Within one method x strictly increases,
/// and every row shares one unit. Method labels are non-empty and free of
/// commas, quotes and line breaks so the CSV form needs no quoting.
class SampleTable {
public:
  void add(Sample s);

  [[nodiscard]] const std::vector<Sample>& rows() const noexcept { return rows_; }
  [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }

  /// Method labels in order of first appearance.
  [[nodiscard]] std::vector<std::string> methods() const;
  [[nodiscard]] std::vector<Sample> series(std::string_view method) const;

  /// Appends every row of `other`, subject to the same checks as add().
  void append(const SampleTable& other);

  friend bool operator==(const SampleTable&, const SampleTable&) = default;

private:
  std::vector<Sample> rows_;
};

/// "x,method,value,unit" header then one LF-terminated row per sample.
/// Numbers use the shortest form that parses back to the same double.
[[nodiscard]] std::string export_csv(const SampleTable& table);
[[nodiscard]] SampleTable parse_csv(std::string_view csv);

// ---------------------------------------------------------------------------
// Timing

inline constexpr int kDefaultRepetitions = 5;

[[nodiscard]] double median(std::vector<double> values);

/// For every x: one untimed warm-up call, then `repetitions` calls timed on
/// the steady clock; the median in seconds becomes the row value. A runner
/// exception is rethrown as an Error naming the method and x, with the
/// original nested.
[[nodiscard]] SampleTable measure(std::string_view method, std::span<const double> xs,
                                  const std::function<void(double)>& runner,
                                  int repetitions = kDefaultRepetitions);

// ---------------------------------------------------------------------------
// Sorting

enum class SortAlgorithm { insertion, merge };

[[nodiscard]] std::string_view algorithm_name(SortAlgorithm a) noexcept;

void insertion_sort(std::span<std::uint64_t> v);
void merge_sort(std::span<std::uint64_t> v);
void run_sort(SortAlgorithm a, std::span<std::uint64_t> v);

/// `n` uniform 64-bit integers from Xoshiro256ss(derive_seed(seed, n)).
[[nodiscard]] std::vector<std::uint64_t> sort_input(std::size_t n, std::uint64_t seed);

/// Median seconds per (size, algorithm). Every algorithm is first checked
/// against std::sort on the same seeded input; a mismatch throws
/// CorrectnessError before any timing.
[[nodiscard]] SampleTable bench_sorts(std::span<const std::size_t> sizes,
                                      std::span<const SortAlgorithm> algorithms,
                                      std::uint64_t seed = 1,
                                      int repetitions = kDefaultRepetitions);

// ---------------------------------------------------------------------------
// Plotting

/// Where plot_series put the data area, in canvas user units (which equal
/// pixels, y up).
struct PlotFrame {
  double left;
  double bottom;
  double right;
  double top;
  double x_min;
  double x_max;
  double y_max; // 1.05 * largest value
};

/// Line chart of every method in `table`: left/bottom axes with ticks, one
/// polyline per method in its own colour (a single sample is a point), and a
/// banner-font legend drawn as points. Throws RangeError on an empty table.
[[nodiscard]] raster::Canvas plot_series(const SampleTable& table, std::size_t pixel_w = 640,
                                         std::size_t pixel_h = 480,
                                         PlotFrame* frame_out = nullptr);

/// Colour of the i-th method in a plot.
[[nodiscard]] NamedColor series_color(std::size_t i) noexcept;

} // namespace figdraw::bench
