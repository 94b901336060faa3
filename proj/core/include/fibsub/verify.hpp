#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fibsub/classify.hpp"

// Exhaustive finite-range checkers: that B, B+1, AB+1 partition the
// positive integers, and that the closed-form classifier, the enumeration
// route, and the brute-force Grundy sieve all agree.

namespace fibsub {

struct ClassCounts {
  std::uint64_t terminal = 0;
  std::uint64_t b = 0;
  std::uint64_t b1 = 0;
  std::uint64_t ab1 = 0;

  std::uint64_t total() const { return terminal + b + b1 + ab1; }
  bool operator==(const ClassCounts&) const = default;
};

struct Counterexample {
  std::uint64_t position;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool passed = false;
  std::optional<Counterexample> first_counterexample;
  ClassCounts counts;
};

// Walks the three generated sequences in lockstep and yields, for each
// successive x, how many of them contain x and which. Shared by the
// verifiers so membership comes from literal enumeration of the sets.
class PartitionCursor {
 public:
  PartitionCursor();  // positioned before x = 1

  struct Membership {
    bool in_b;
    bool in_b1;
    bool in_ab1;
    int multiplicity() const { return int(in_b) + int(in_b1) + int(in_ab1); }
  };

  // Membership of the next position (1, 2, 3, ... in order).
  Membership advance();

 private:
  std::uint64_t x_ = 0;
  std::uint64_t next_b_;
  std::uint64_t next_b1_;
  std::uint64_t next_ab1_;
  std::uint64_t n_b_ = 1;
  std::uint64_t n_b1_ = 1;
  std::uint64_t n_ab1_ = 1;
};

// Every x in [1, n] lies in exactly one of the enumerated sets B, B+1,
// AB+1. Counts report the sizes of the three intersections with [1, n].
VerificationReport verify_partition(std::uint64_t n);

// For every x in [0, n]: the sieve value, the Zeckendorf classifier and
// the enumeration route all give the same class/Grundy value.
VerificationReport verify_equivalence(std::uint64_t n);

}  // namespace fibsub
