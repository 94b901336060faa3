#include "fibsub/zeckendorf.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace fibsub {

namespace {

constexpr std::array<std::uint64_t, kMaxFibIndex + 1> kFib = [] {
  std::array<std::uint64_t, kMaxFibIndex + 1> f{};
  f[1] = 1;
  f[2] = 1;
  for (int i = 3; i <= kMaxFibIndex; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}();

}  // namespace

std::uint64_t fib(int i) {
  if (i < 1 || i > kMaxFibIndex) {
    throw std::out_of_range("fib: index " + std::to_string(i) +
                            " outside [1, 93]");
  }
  return kFib[static_cast<std::size_t>(i)];
}

int fib_floor_index(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("fib_floor_index: x must be >= 1");
  // Search F_2..F_93, which is strictly increasing.
  auto first = kFib.begin() + 2;
  auto it = std::upper_bound(first, kFib.end(), x);
  return static_cast<int>((it - kFib.begin()) - 1);
}

ZeckendorfRep zeckendorf_encode(std::uint64_t x) {
  if (x >= kMaxPosition) {
    throw std::out_of_range("zeckendorf_encode: x must be below 2^63");
  }
  ZeckendorfRep rep;
  while (x > 0) {
    int i = fib_floor_index(x);
    rep.indices.push_back(i);
    x -= kFib[static_cast<std::size_t>(i)];
  }
  // Greedy emits indices in descending order; the remainder after taking
  // F_i is below F_{i-1}, so consecutive picks always differ by >= 2.
  std::reverse(rep.indices.begin(), rep.indices.end());
  return rep;
}

std::uint64_t zeckendorf_decode(const ZeckendorfRep& rep) {
  std::uint64_t sum = 0;
  int prev = 0;
  for (int i : rep.indices) {
    if (i < 2 || i > kMaxFibIndex) {
      throw std::invalid_argument("zeckendorf_decode: index " +
                                  std::to_string(i) + " outside [2, 93]");
    }
    if (prev != 0 && i <= prev + 1) {
      throw std::invalid_argument(
          "zeckendorf_decode: indices must be ascending and non-adjacent");
    }
    if (__builtin_add_overflow(sum, kFib[static_cast<std::size_t>(i)], &sum)) {
      throw std::overflow_error("zeckendorf_decode: sum exceeds 64 bits");
    }
    prev = i;
  }
  return sum;
}

int smallest_index(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("smallest_index: undefined for 0");
  return zeckendorf_low_terms(x).z1;
}

ZeckendorfLowTerms zeckendorf_low_terms(std::uint64_t x) {
  if (x == 0) {
    throw std::invalid_argument("zeckendorf_low_terms: undefined for 0");
  }
  if (x >= kMaxPosition) {
    throw std::out_of_range("zeckendorf_low_terms: x must be below 2^63");
  }
  int count = 0;
  int last = 0;
  int second_last = 0;
  while (x > 0) {
    int i = fib_floor_index(x);
    second_last = last;
    last = i;
    ++count;
    x -= kFib[static_cast<std::size_t>(i)];
  }
  return ZeckendorfLowTerms{count, last, second_last};
}

}  // namespace fibsub
