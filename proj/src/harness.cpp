#include <algorithm>
#include <chrono>
#include <exception>

#include "figdraw/bench.hpp"
#include "figdraw/errors.hpp"

namespace figdraw::bench {

double median(std::vector<double> values) {
  if (values.empty()) throw RangeError("median of no values");
  std::ranges::sort(values);
  const auto mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2;
}

SampleTable measure(std::string_view method, std::span<const double> xs,
                    const std::function<void(double)>& runner, int repetitions) {
  if (repetitions < 1) throw RangeError("repetitions must be at least 1");
  using clock = std::chrono::steady_clock;

  std::vector<double> sorted(xs.begin(), xs.end());
  std::ranges::sort(sorted);

  SampleTable table;
  std::vector<double> times;
  for (double x : sorted) {
    times.clear();
    try {
      runner(x);
      for (int k = 0; k < repetitions; ++k) {
        const auto t0 = clock::now();
        runner(x);
        const auto t1 = clock::now();
        times.push_back(std::chrono::duration<double>(t1 - t0).count());
      }
    } catch (const std::exception& e) {
      std::throw_with_nested(
          Error(std::string(method) + " failed at x=" + std::to_string(x) + ": " + e.what()));
    }
    table.add({x, std::string(method), median(times), Unit::seconds});
  }
  return table;
}

} // namespace figdraw::bench
