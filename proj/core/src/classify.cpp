#include "fibsub/classify.hpp"

#include <stdexcept>
#include <string>

#include "fibsub/beatty.hpp"
#include "fibsub/grundy.hpp"
#include "fibsub/zeckendorf.hpp"

namespace fibsub {

namespace {

const SubtractionSet& game_set() {
  static const SubtractionSet set = SubtractionSet::odd_fibonacci_minus_one();
  return set;
}

// Smallest n in [1, hi] with gen(n) >= x; gen must be strictly increasing.
template <typename Gen>
std::uint64_t first_at_least(Gen gen, std::uint64_t x, std::uint64_t hi) {
  std::uint64_t lo = 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (gen(mid) < x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

bool is_upper_wythoff_value(std::uint64_t x) {
  // upper_wythoff(n) >= 2n, so the index of x is at most x/2 + 1.
  std::uint64_t n = first_at_least(upper_wythoff, x, x / 2 + 1);
  return upper_wythoff(n) == x;
}

bool is_ab_value(std::uint64_t x) {
  if (x < 3) return false;
  // ab(n) >= 3n, so the index of x is at most x/3 + 1.
  std::uint64_t n = first_at_least(ab, x, x / 3 + 1);
  return ab(n) == x;
}

}  // namespace

PositionClass classify(std::uint64_t x) {
  if (x >= kMaxPosition) {
    throw std::out_of_range("classify: x must be below 2^63");
  }
  if (x == 0) return PositionClass::kTerminal;
  ZeckendorfLowTerms z = zeckendorf_low_terms(x);
  if (z.z1 % 2 == 1) return PositionClass::kB;
  if (z.z1 >= 4) return PositionClass::kB1;
  // z1 = 2: the second-smallest index decides.
  if (z.term_count == 1 || z.z2 % 2 == 1) return PositionClass::kB1;
  return PositionClass::kAB1;
}

PositionClass classify_by_enumeration(std::uint64_t x, std::uint64_t bound) {
  if (x > bound) {
    throw std::out_of_range(
        "classify_by_enumeration: bound too small for position");
  }
  if (x >= kMaxPosition) {
    throw std::out_of_range("classify_by_enumeration: x must be below 2^63");
  }
  if (x == 0) return PositionClass::kTerminal;
  bool in_b = is_upper_wythoff_value(x);
  bool in_b1 = x == 1 || is_upper_wythoff_value(x - 1);
  bool in_ab1 = x >= 4 && is_ab_value(x - 1);
  int hits = int(in_b) + int(in_b1) + int(in_ab1);
  if (hits != 1) {
    // Cannot happen: the three sets partition the positive integers.
    throw std::logic_error("classify_by_enumeration: partition violated at " +
                           std::to_string(x));
  }
  if (in_b) return PositionClass::kB;
  if (in_b1) return PositionClass::kB1;
  return PositionClass::kAB1;
}

FollowerProperties follower_properties(std::uint64_t x) {
  if (x == 0) {
    throw std::invalid_argument("follower_properties: x must be >= 1");
  }
  FollowerProperties props{};
  for (std::size_t n = 0;; ++n) {
    auto s = game_set().nth(n);
    if (!s || *s > x) break;
    std::uint64_t follower = x - *s;
    if (follower == 0) {
      props.has_terminal = true;
      continue;
    }
    switch (classify(follower)) {
      case PositionClass::kB:
        props.has_b = true;
        break;
      case PositionClass::kB1:
        props.has_b1 = true;
        break;
      case PositionClass::kAB1:
        props.has_ab1 = true;
        break;
      case PositionClass::kTerminal:
        break;
    }
  }
  return props;
}

Winner winner(std::uint64_t x) {
  return grundy_of(classify(x)) == 0 ? Winner::kPreviousPlayer
                                     : Winner::kNextPlayer;
}

SumOutcome sum_winner(std::span<const std::uint64_t> positions) {
  unsigned total = 0;
  for (std::uint64_t x : positions) total ^= grundy_of(classify(x));
  if (total == 0) return SumOutcome{Winner::kPreviousPlayer, std::nullopt};

  for (std::size_t i = 0; i < positions.size(); ++i) {
    unsigned rest = total ^ grundy_of(classify(positions[i]));
    for (std::size_t n = 0;; ++n) {
      auto s = game_set().nth(n);
      if (!s || *s > positions[i]) break;
      if (grundy_of(classify(positions[i] - *s)) == rest) {
        return SumOutcome{Winner::kNextPlayer, SumMove{i, *s}};
      }
    }
  }
  // The mex property guarantees a move to XOR 0 exists when total != 0.
  throw std::logic_error("sum_winner: no balancing move found");
}

}  // namespace fibsub
