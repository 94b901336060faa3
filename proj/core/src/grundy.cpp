#include "fibsub/grundy.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "fibsub/zeckendorf.hpp"

namespace fibsub {

SubtractionSet::SubtractionSet(std::string name, Generator nth)
    : name_(std::move(name)), nth_(std::move(nth)) {}

SubtractionSet SubtractionSet::odd_fibonacci_minus_one() {
  return SubtractionSet(
      "F(2n+1)-1", [](std::size_t n) -> std::optional<std::uint64_t> {
        std::size_t index = 2 * n + 3;
        if (index > static_cast<std::size_t>(kMaxFibIndex)) return std::nullopt;
        return fib(static_cast<int>(index)) - 1;
      });
}

SubtractionSet SubtractionSet::from_values(std::string name,
                                           std::vector<std::uint64_t> values) {
  return SubtractionSet(
      std::move(name),
      [values = std::move(values)](
          std::size_t n) -> std::optional<std::uint64_t> {
        if (n >= values.size()) return std::nullopt;
        return values[n];
      });
}

std::vector<std::uint64_t> SubtractionSet::values_upto(
    std::uint64_t limit) const {
  std::vector<std::uint64_t> out;
  std::uint64_t prev = 0;
  for (std::size_t n = 0;; ++n) {
    auto s = nth_(n);
    if (!s || *s > limit) break;
    if (*s == 0 || *s <= prev) {
      throw std::logic_error("SubtractionSet '" + name_ +
                             "' is not strictly increasing positive");
    }
    prev = *s;
    out.push_back(*s);
  }
  return out;
}

GrundyTable::GrundyTable(std::string set_name, std::uint64_t max_position)
    : set_name_(std::move(set_name)),
      max_position_(max_position),
      words_((max_position / 32) + 1, 0) {}

GrundyTable GrundyTable::from_values(std::string name,
                                     std::span<const unsigned> values) {
  if (values.empty()) {
    throw std::invalid_argument("GrundyTable::from_values: empty table");
  }
  GrundyTable t(std::move(name), values.size() - 1);
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    if (values[x] > 3) {
      throw std::invalid_argument(
          "GrundyTable::from_values: value exceeds 2-bit range");
    }
    t.set(x, values[x]);
  }
  return t;
}

unsigned mex(std::span<const unsigned> values) {
  // mex of k values is at most k, so a presence table of size k+1 suffices.
  std::vector<bool> present(values.size() + 1, false);
  for (unsigned v : values) {
    if (v < present.size()) present[v] = true;
  }
  unsigned m = 0;
  while (present[m]) ++m;
  return m;
}

GrundyTable grundy_sieve(const SubtractionSet& set, std::uint64_t n) {
  if (n >= (std::uint64_t{1} << 32)) {
    throw std::out_of_range("grundy_sieve: n must be below 2^32");
  }
  GrundyTable table(set.name(), n);
  table.subtrahends_ = set.values_upto(n);
  const auto& subs = table.subtrahends_;
  for (std::uint64_t x = 0; x <= n; ++x) {
    // Presence mask over the option values; stored values are <= 3, so the
    // mex is the number of trailing ones in the low nibble.
    unsigned mask = 0;
    for (std::uint64_t s : subs) {
      if (s > x) break;
      mask |= 1u << table.value(x - s);
    }
    unsigned g = static_cast<unsigned>(std::countr_one(mask));
    if (g > 3) {
      throw std::overflow_error(
          "grundy_sieve: mex exceeds 3 at position " + std::to_string(x) +
          "; this game does not fit 2-bit packing");
    }
    table.set(x, g);
  }
  return table;
}

PeriodReport period_scan(const GrundyTable& table, std::uint64_t max_period,
                         std::uint64_t max_preperiod) {
  const std::uint64_t n = table.max_position();
  if (max_period == 0 || max_preperiod + 2 * max_period > n) {
    throw std::invalid_argument(
        "period_scan: window too small (need max_preperiod + 2*max_period "
        "<= table size)");
  }
  PeriodReport report{max_period, max_preperiod, std::nullopt};
  for (std::uint64_t p = 1; p <= max_period; ++p) {
    // The minimal viable preperiod for p is one past the last mismatch of
    // g(x) vs g(x+p). Scanning downward exits early for aperiodic tables.
    std::uint64_t t = 0;
    for (std::uint64_t x = n - p;; --x) {
      if (table.value(x) != table.value(x + p)) {
        t = x + 1;
        break;
      }
      if (x == 0) break;
    }
    if (t <= max_preperiod) {
      report.found = FoundPeriod{t, p};
      return report;
    }
  }
  return report;
}

std::set<unsigned> nim_value_group(const GrundyTable& table) {
  unsigned members = 1;  // bit v set iff v in the group; 0 always included
  for (std::uint64_t x = 0; x <= table.max_position(); ++x) {
    members |= 1u << table.value(x);
  }
  // XOR closure; values live in {0,1,2,3} so iterate to a fixed point.
  for (bool grew = true; grew;) {
    grew = false;
    for (unsigned a = 0; a < 4; ++a) {
      if (!(members & (1u << a))) continue;
      for (unsigned b = 0; b < 4; ++b) {
        if ((members & (1u << b)) && !(members & (1u << (a ^ b)))) {
          members |= 1u << (a ^ b);
          grew = true;
        }
      }
    }
  }
  std::set<unsigned> group;
  for (unsigned v = 0; v < 4; ++v) {
    if (members & (1u << v)) group.insert(v);
  }
  return group;
}

std::vector<std::uint64_t> optimal_moves(const GrundyTable& table,
                                         std::uint64_t x) {
  if (x > table.max_position()) {
    throw std::out_of_range("optimal_moves: position beyond table");
  }
  std::vector<std::uint64_t> moves;
  for (std::uint64_t s : table.subtrahends()) {
    if (s > x) break;
    if (table.value(x - s) == 0) moves.push_back(s);
  }
  return moves;
}

}  // namespace fibsub
