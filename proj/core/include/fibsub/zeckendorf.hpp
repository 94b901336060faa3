#pragma once

#include <cstdint>
#include <vector>

// Exact Fibonacci arithmetic and the Zeckendorf codec.
//
// Convention: F_1 = F_2 = 1, F_3 = 2, F_4 = 3, ...  Zeckendorf
// representations use indices >= 2 only, which makes them unique.

namespace fibsub {

// Largest index whose Fibonacci number fits in 64 bits.
inline constexpr int kMaxFibIndex = 93;

// Positions handled by the codec are below 2^63.
inline constexpr std::uint64_t kMaxPosition = std::uint64_t{1} << 63;

// F_i for 1 <= i <= 93. Throws std::out_of_range otherwise.
std::uint64_t fib(int i);

// Largest i with F_i <= x, resolving the F_1 = F_2 tie upward (returns 2
// for x = 1 so that results are always valid Zeckendorf indices).
// Requires x >= 1.
int fib_floor_index(std::uint64_t x);

// Ascending Fibonacci indices, each >= 2, no two consecutive.
// The empty list represents exactly 0.
struct ZeckendorfRep {
  std::vector<int> indices;

  bool operator==(const ZeckendorfRep&) const = default;
};

// Greedy Zeckendorf decomposition of x < 2^63.
ZeckendorfRep zeckendorf_encode(std::uint64_t x);

// Sum of F_i over the representation. Throws std::invalid_argument if the
// indices are not ascending non-adjacent values >= 2, std::overflow_error
// if the sum would wrap 64 bits.
std::uint64_t zeckendorf_decode(const ZeckendorfRep& rep);

// z_1: the smallest index in the Zeckendorf expansion of x >= 1.
int smallest_index(std::uint64_t x);

// The two smallest indices of the expansion plus the term count, computed
// without materializing the representation. z2 is 0 when there is a single
// term. Requires x >= 1.
struct ZeckendorfLowTerms {
  int term_count;
  int z1;
  int z2;
};

ZeckendorfLowTerms zeckendorf_low_terms(std::uint64_t x);

}  // namespace fibsub
