#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

// Brute-force Sprague-Grundy engine for subtraction games. The sieve is
// the independent oracle the closed-form classifier is validated against.

namespace fibsub {

// Monotone generator of legal subtrahends: strictly increasing positive
// integers, possibly unbounded.
class SubtractionSet {
 public:
  // nth(n) yields the 0-based nth subtrahend, or nullopt once the set is
  // exhausted (finite sets, or 64-bit range exhaustion).
  using Generator = std::function<std::optional<std::uint64_t>(std::size_t)>;

  SubtractionSet(std::string name, Generator nth);

  // The game studied here: s_n = F_{2n+1} - 1 = 1, 4, 12, 33, 88, ...
  static SubtractionSet odd_fibonacci_minus_one();

  // Finite set from an explicit ascending list (mostly for tests).
  static SubtractionSet from_values(std::string name,
                                    std::vector<std::uint64_t> values);

  const std::string& name() const { return name_; }
  std::optional<std::uint64_t> nth(std::size_t n) const { return nth_(n); }

  // All subtrahends <= limit, ascending. Throws std::logic_error if the
  // generator violates monotonicity or positivity.
  std::vector<std::uint64_t> values_upto(std::uint64_t limit) const;

 private:
  std::string name_;
  Generator nth_;
};

// Grundy values for positions 0..max_position, packed 2 bits each.
// Immutable once built; reads are safe from any number of threads.
class GrundyTable {
 public:
  std::uint64_t max_position() const { return max_position_; }
  const std::string& set_name() const { return set_name_; }
  const std::vector<std::uint64_t>& subtrahends() const { return subtrahends_; }

  unsigned value(std::uint64_t x) const {
    return static_cast<unsigned>(
        (words_[x >> 5] >> ((x & 31) * 2)) & 3);
  }

  std::size_t packed_bytes() const { return words_.size() * sizeof(std::uint64_t); }

  // Raw table from explicit values (each <= 3); used by period-scan tests
  // on synthetic sequences. Sieve-built tables come from grundy_sieve.
  static GrundyTable from_values(std::string name,
                                 std::span<const unsigned> values);

 private:
  friend GrundyTable grundy_sieve(const SubtractionSet&, std::uint64_t);

  GrundyTable(std::string set_name, std::uint64_t max_position);
  void set(std::uint64_t x, unsigned v) {
    words_[x >> 5] |= std::uint64_t{v} << ((x & 31) * 2);
  }

  std::string set_name_;
  std::uint64_t max_position_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> subtrahends_;  // set members <= max_position
};

// Least nonnegative integer absent from the set of values.
unsigned mex(std::span<const unsigned> values);

// Sieve positions 0..n in increasing order. Throws std::overflow_error if
// any mex exceeds 3 (the 2-bit packing cannot hold this game), and
// std::out_of_range for n >= 2^32.
GrundyTable grundy_sieve(const SubtractionSet& set, std::uint64_t n);

struct FoundPeriod {
  std::uint64_t preperiod;  // t
  std::uint64_t period;     // p
  bool operator==(const FoundPeriod&) const = default;
};

struct PeriodReport {
  std::uint64_t searched_max_period;
  std::uint64_t searched_max_preperiod;
  std::optional<FoundPeriod> found;
};

// Smallest (period, preperiod) in lexicographic order such that
// g(x) = g(x+p) for all t <= x <= N-p, or absent if no such pair exists
// within the search window. Requires max_preperiod + 2*max_period <= N.
PeriodReport period_scan(const GrundyTable& table, std::uint64_t max_period,
                         std::uint64_t max_preperiod);

// Closure under bitwise XOR of the set of values occurring in the table,
// always including 0.
std::set<unsigned> nim_value_group(const GrundyTable& table);

// All s in the table's subtraction set with s <= x and g(x - s) = 0,
// ascending. Throws std::out_of_range for x beyond the table.
std::vector<std::uint64_t> optimal_moves(const GrundyTable& table,
                                         std::uint64_t x);

}  // namespace fibsub
