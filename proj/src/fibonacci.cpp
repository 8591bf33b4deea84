#include <string>

#include "figdraw/bench.hpp"
#include "figdraw/errors.hpp"

namespace figdraw::bench {

namespace {

std::uint64_t fib_stack(int n, std::uint64_t& calls) {
  ++calls;
  if (n < 2) return static_cast<std::uint64_t>(n);
  return fib_stack(n - 1, calls) + fib_stack(n - 2, calls);
}

// The recursive call is the last thing done; nothing waits on the stack.
std::uint64_t fib_tail(int n, std::uint64_t prev, std::uint64_t cur, std::uint64_t& calls) {
  ++calls;
  if (n == 0) return prev;
  if (n == 1) return cur;
  return fib_tail(n - 1, cur, prev + cur, calls);
}

std::uint64_t fib_iter(int n, std::uint64_t& iterations) {
  if (n == 0) return 0;
  std::uint64_t prev = 0;
  std::uint64_t cur = 1;
  for (int i = 2; i <= n; ++i) {
    ++iterations;
    const std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace

FibResult fibonacci(int n, FibStrategy strategy) {
  if (n < 0 || n > kMaxFibIndex) {
    throw RangeError("fibonacci index must be 0.." + std::to_string(kMaxFibIndex) + ", got " +
                     std::to_string(n));
  }
  FibResult r{n, 0, 0};
  switch (strategy) {
  case FibStrategy::stack_recursive:
    r.value = fib_stack(n, r.op_count);
    break;
  case FibStrategy::tail_recursive:
    r.value = fib_tail(n, 0, 1, r.op_count);
    break;
  case FibStrategy::iterative:
    r.value = fib_iter(n, r.op_count);
    break;
  }
  return r;
}

std::string_view strategy_name(FibStrategy s) noexcept {
  switch (s) {
  case FibStrategy::stack_recursive:
    return "stack_recursive";
  case FibStrategy::tail_recursive:
    return "tail_recursive";
  case FibStrategy::iterative:
    return "iterative";
  }
  return "?";
}

} // namespace figdraw::bench
