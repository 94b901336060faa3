#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

// Closed-form classification of positions of the subtraction game with
// set {F_{2n+1} - 1}. The positive integers split into three sets
//
//   B    = { floor(n*phi^2) }          g = 0
//   B+1  = { floor(n*phi^2) + 1 }      g = 1   (n >= 0, so 1 is included)
//   AB+1 = { 2*floor(n*phi) + n + 1 }  g = 2
//
// and the Grundy value of a position is determined by which set it lies
// in. Two independent membership routes are provided: the Zeckendorf
// criterion (classify) and direct search of the generated sequences
// (classify_by_enumeration).

namespace fibsub {

enum class PositionClass : std::uint8_t { kTerminal, kB, kB1, kAB1 };

constexpr unsigned grundy_of(PositionClass c) {
  switch (c) {
    case PositionClass::kTerminal:
    case PositionClass::kB:
      return 0;
    case PositionClass::kB1:
      return 1;
    case PositionClass::kAB1:
      return 2;
  }
  return 0;
}

constexpr std::string_view class_tag(PositionClass c) {
  switch (c) {
    case PositionClass::kTerminal:
      return "T";
    case PositionClass::kB:
      return "B";
    case PositionClass::kB1:
      return "B1";
    case PositionClass::kAB1:
      return "AB1";
  }
  return "T";
}

// Classify x < 2^63 by the Zeckendorf criterion, O(log x):
//   x = 0                           -> Terminal
//   z1 odd                          -> B
//   z1 even >= 4                    -> B+1
//   z1 = 2, single term or z2 odd   -> B+1
//   z1 = 2, z2 even                 -> AB+1
PositionClass classify(std::uint64_t x);

// Classify by locating x in the three generated sequences themselves
// (monotone search over the exact generators; no Zeckendorf arithmetic).
// Throws std::out_of_range if x > bound.
PositionClass classify_by_enumeration(std::uint64_t x, std::uint64_t bound);

// Class membership of the followers {x - s : s in S, s <= x} of x >= 1.
// The terminal follower (0) is tracked separately from the B members so
// statements about "a follower in B" vs "a follower with value 0" can be
// made exactly.
struct FollowerProperties {
  bool has_terminal;  // 0 is a follower, i.e. x itself is in S
  bool has_b;
  bool has_b1;
  bool has_ab1;
};

FollowerProperties follower_properties(std::uint64_t x);

enum class Winner : std::uint8_t { kPreviousPlayer, kNextPlayer };

// Single-game outcome under optimal play: the previous player wins iff
// the Grundy value of x is 0.
Winner winner(std::uint64_t x);

struct SumMove {
  std::size_t component;
  std::uint64_t subtrahend;
  bool operator==(const SumMove&) const = default;
};

struct SumOutcome {
  Winner winner;
  std::optional<SumMove> move;  // a move to XOR 0, when one exists
};

// Disjunctive sum of games: XOR the component Grundy values. When the
// next player wins, also return the first winning move, searching
// components ascending and subtrahends ascending within a component.
SumOutcome sum_winner(std::span<const std::uint64_t> positions);

}  // namespace fibsub
