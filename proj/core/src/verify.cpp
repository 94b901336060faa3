#include "fibsub/verify.hpp"

#include <string>

#include "fibsub/beatty.hpp"
#include "fibsub/grundy.hpp"

namespace fibsub {

PartitionCursor::PartitionCursor()
    : next_b_(upper_wythoff(1)),      // 2
      next_b1_(1),                    // n = 0 term
      next_ab1_(ab(1) + 1) {}         // 4

PartitionCursor::Membership PartitionCursor::advance() {
  ++x_;
  Membership m{};
  if (x_ == next_b_) {
    m.in_b = true;
    next_b_ = upper_wythoff(++n_b_);
  }
  if (x_ == next_b1_) {
    m.in_b1 = true;
    next_b1_ = upper_wythoff(n_b1_++) + 1;
  }
  if (x_ == next_ab1_) {
    m.in_ab1 = true;
    next_ab1_ = ab(++n_ab1_) + 1;
  }
  return m;
}

VerificationReport verify_partition(std::uint64_t n) {
  VerificationReport report;
  report.lo = 1;
  report.hi = n;
  report.passed = true;
  PartitionCursor cursor;
  for (std::uint64_t x = 1; x <= n; ++x) {
    auto m = cursor.advance();
    report.counts.b += m.in_b;
    report.counts.b1 += m.in_b1;
    report.counts.ab1 += m.in_ab1;
    if (m.multiplicity() != 1 && report.passed) {
      report.passed = false;
      std::string detail = "covered by " + std::to_string(m.multiplicity()) +
                           " sets:" + (m.in_b ? " B" : "") +
                           (m.in_b1 ? " B+1" : "") + (m.in_ab1 ? " AB+1" : "");
      report.first_counterexample = Counterexample{x, detail};
    }
  }
  return report;
}

namespace {

PositionClass class_of_membership(const PartitionCursor::Membership& m) {
  if (m.in_b) return PositionClass::kB;
  if (m.in_b1) return PositionClass::kB1;
  return PositionClass::kAB1;
}

}  // namespace

VerificationReport verify_equivalence(std::uint64_t n) {
  VerificationReport report;
  report.lo = 0;
  report.hi = n;
  report.passed = true;
  GrundyTable table = grundy_sieve(SubtractionSet::odd_fibonacci_minus_one(), n);

  auto fail = [&report](std::uint64_t x, std::string detail) {
    if (report.passed) {
      report.passed = false;
      report.first_counterexample = Counterexample{x, std::move(detail)};
    }
  };

  // x = 0 separately: the sets cover only positive integers.
  report.counts.terminal = 1;
  if (classify(0) != PositionClass::kTerminal || table.value(0) != 0) {
    fail(0, "terminal position must have value 0");
  }

  PartitionCursor cursor;
  for (std::uint64_t x = 1; x <= n; ++x) {
    auto m = cursor.advance();
    PositionClass closed = classify(x);
    switch (closed) {
      case PositionClass::kB:
        ++report.counts.b;
        break;
      case PositionClass::kB1:
        ++report.counts.b1;
        break;
      case PositionClass::kAB1:
        ++report.counts.ab1;
        break;
      case PositionClass::kTerminal:
        break;
    }
    if (m.multiplicity() != 1) {
      fail(x, "enumeration covers position " +
                  std::to_string(m.multiplicity()) + " times");
      continue;
    }
    PositionClass enumerated = class_of_membership(m);
    if (enumerated != closed) {
      fail(x, std::string("closed form says ") + std::string(class_tag(closed)) +
                  ", enumeration says " + std::string(class_tag(enumerated)));
      continue;
    }
    unsigned sieved = table.value(x);
    if (grundy_of(closed) != sieved) {
      fail(x, "closed form g=" + std::to_string(grundy_of(closed)) +
                  ", sieve g=" + std::to_string(sieved));
    }
  }
  return report;
}

}  // namespace fibsub
