#include <algorithm>
#include <string>

#include "figdraw/bench.hpp"
#include "figdraw/errors.hpp"
#include "figdraw/rng.hpp"

namespace figdraw::bench {

namespace {

void merge_sort_rec(std::span<std::uint64_t> v, std::span<std::uint64_t> scratch) {
  if (v.size() < 2) return;
  const auto mid = v.size() / 2;
  merge_sort_rec(v.first(mid), scratch.first(mid));
  merge_sort_rec(v.subspan(mid), scratch.subspan(mid));
  std::size_t i = 0;
  std::size_t j = mid;
  std::size_t k = 0;
  while (i < mid && j < v.size()) scratch[k++] = v[j] < v[i] ? v[j++] : v[i++];
  while (i < mid) scratch[k++] = v[i++];
  while (j < v.size()) scratch[k++] = v[j++];
  std::ranges::copy(scratch.first(v.size()), v.begin());
}

// Keeps the sorted result alive so the optimiser cannot drop the work.
volatile std::uint64_t g_sink = 0;

} // namespace

std::string_view algorithm_name(SortAlgorithm a) noexcept {
  return a == SortAlgorithm::insertion ? "insertion" : "merge";
}

void insertion_sort(std::span<std::uint64_t> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    const std::uint64_t key = v[i];
    std::size_t j = i;
    while (j > 0 && v[j - 1] > key) {
      v[j] = v[j - 1];
      --j;
    }
    v[j] = key;
  }
}

void merge_sort(std::span<std::uint64_t> v) {
  std::vector<std::uint64_t> scratch(v.size());
  merge_sort_rec(v, scratch);
}

void run_sort(SortAlgorithm a, std::span<std::uint64_t> v) {
  if (a == SortAlgorithm::insertion) {
    insertion_sort(v);
  } else {
    merge_sort(v);
  }
}

std::vector<std::uint64_t> sort_input(std::size_t n, std::uint64_t seed) {
  Xoshiro256ss rng(derive_seed(seed, n));
  std::vector<std::uint64_t> v(n);
  for (auto& x : v) x = rng();
  return v;
}

SampleTable bench_sorts(std::span<const std::size_t> sizes,
                        std::span<const SortAlgorithm> algorithms, std::uint64_t seed,
                        int repetitions) {
  if (!std::ranges::is_sorted(sizes)) throw RangeError("sort sizes must be ascending");

  for (std::size_t n : sizes) {
    const auto input = sort_input(n, seed);
    auto reference = input;
    std::ranges::sort(reference);
    for (auto a : algorithms) {
      auto out = input;
      run_sort(a, out);
      if (out != reference) {
        throw CorrectnessError(std::string(algorithm_name(a)) + " sort produced wrong output at n=" +
                               std::to_string(n));
      }
    }
  }

  SampleTable table;
  for (auto a : algorithms) {
    std::vector<double> xs(sizes.begin(), sizes.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    auto runner = [a, seed](double x) {
      auto v = sort_input(static_cast<std::size_t>(x), seed);
      run_sort(a, v);
      if (!v.empty()) g_sink = v.front() ^ v.back();
    };
    table.append(measure(algorithm_name(a), xs, runner, repetitions));
  }
  return table;
}

} // namespace figdraw::bench
