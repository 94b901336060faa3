#include "fibsub/beatty.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "doctest.h"

using namespace fibsub;

TEST_CASE("lower_wythoff fixed values") {
  CHECK(lower_wythoff(1) == 1);
  CHECK(lower_wythoff(4) == 6);
  CHECK(lower_wythoff(12) == 19);
  CHECK_THROWS_AS(lower_wythoff(0), std::invalid_argument);
  CHECK_THROWS_AS(lower_wythoff(std::uint64_t{1} << 62), std::overflow_error);
}

TEST_CASE("upper_wythoff fixed values") {
  CHECK(upper_wythoff(1) == 2);
  CHECK(upper_wythoff(3) == 7);
  CHECK(upper_wythoff(12) == 31);
}

TEST_CASE("ab fixed values") {
  CHECK(ab(1) == 3);
  CHECK(ab(2) == 8);
  CHECK(ab(3) == 11);
}

TEST_CASE("membership predicates") {
  CHECK(in_lower_wythoff(1));
  CHECK(!in_lower_wythoff(2));
  CHECK(in_lower_wythoff(6));
  CHECK(in_upper_wythoff(2));
  CHECK(!in_upper_wythoff(3));
  CHECK(in_upper_wythoff(31));
}

TEST_CASE("fibonacci_word prefixes") {
  CHECK(fibonacci_word(0) == "");
  CHECK(fibonacci_word(1) == "a");
  CHECK(fibonacci_word(5) == "abaab");
  CHECK(fibonacci_word(13) == "abaababaabaab");
}

TEST_CASE("fibonacci_word prefixes nest") {
  // Each prefix of the infinite word is a prefix of every longer one.
  std::string big = fibonacci_word(1000);
  for (std::size_t len : {1u, 2u, 3u, 5u, 8u, 144u, 987u}) {
    CHECK(fibonacci_word(len) == big.substr(0, len));
  }
}

TEST_CASE("upper minus lower identity is exact") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    REQUIRE(upper_wythoff(n) - lower_wythoff(n) == n);
  }
  // And at scale, where floating point would drift.
  for (std::uint64_t n = 1; n <= 100; ++n) {
    std::uint64_t big = (std::uint64_t{1} << 61) + n * 977;
    REQUIRE(upper_wythoff(big) - lower_wythoff(big) == big);
  }
}

TEST_CASE("lower/upper sequences are complementary up to 10^6") {
  constexpr std::uint64_t kBound = 1000000;
  std::uint64_t na = 1;
  std::uint64_t nb = 1;
  std::uint64_t next_a = lower_wythoff(na);
  std::uint64_t next_b = upper_wythoff(nb);
  for (std::uint64_t x = 1; x <= kBound; ++x) {
    bool is_a = x == next_a;
    bool is_b = x == next_b;
    REQUIRE(is_a != is_b);  // exactly one sequence produces each integer
    REQUIRE(is_a == in_lower_wythoff(x));
    REQUIRE(is_b == in_upper_wythoff(x));
    if (is_a) next_a = lower_wythoff(++na);
    if (is_b) next_b = upper_wythoff(++nb);
  }
}

TEST_CASE("predicates agree with generators") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    REQUIRE(in_lower_wythoff(lower_wythoff(n)));
    REQUIRE(in_upper_wythoff(upper_wythoff(n)));
  }
}

TEST_CASE("ab composes the two Beatty maps") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    REQUIRE(ab(n) == lower_wythoff(upper_wythoff(n)));
  }
}

TEST_CASE("word symbols match lower-Wythoff membership up to 10^6") {
  std::string word = fibonacci_word(1000000);
  for (std::uint64_t k = 1; k <= word.size(); ++k) {
    REQUIRE((word[k - 1] == 'a') == in_lower_wythoff(k));
  }
}
