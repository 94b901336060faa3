#include "fibsub/beatty.hpp"

#include <bit>
#include <stdexcept>

#include "fibsub/zeckendorf.hpp"

namespace fibsub {

namespace {

using u128 = unsigned __int128;

int bit_width_u128(u128 v) {
  auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<std::uint64_t>(v));
}

// Exact floor(sqrt(v)) by Newton iteration; converges from any start >=
// the true root, monotonically decreasing.
std::uint64_t isqrt(u128 v) {
  if (v < 2) return static_cast<std::uint64_t>(v);
  u128 x0 = u128{1} << ((bit_width_u128(v) + 1) / 2);
  u128 x1 = (x0 + v / x0) / 2;
  while (x1 < x0) {
    x0 = x1;
    x1 = (x0 + v / x0) / 2;
  }
  return static_cast<std::uint64_t>(x0);
}

}  // namespace

std::uint64_t lower_wythoff(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("lower_wythoff: n must be >= 1");
  if (n >= (std::uint64_t{1} << 62)) {
    throw std::overflow_error("lower_wythoff: n must be below 2^62");
  }
  // n*phi = (n + sqrt(5 n^2)) / 2, and sqrt(5 n^2) is irrational, so the
  // integer floor commutes with the halving.
  u128 five_n_sq = u128{5} * n * n;
  return (n + isqrt(five_n_sq)) / 2;
}

std::uint64_t upper_wythoff(std::uint64_t n) { return n + lower_wythoff(n); }

std::uint64_t ab(std::uint64_t n) { return 2 * lower_wythoff(n) + n; }

bool in_lower_wythoff(std::uint64_t x) { return smallest_index(x) % 2 == 0; }

bool in_upper_wythoff(std::uint64_t x) { return !in_lower_wythoff(x); }

std::string fibonacci_word(std::size_t length) {
  std::string word;
  if (length == 0) return word;
  word.reserve(length);
  word = "a";
  if (length == 1) return word;
  word += 'b';
  // w_{k+1} = w_k w_{k-1}, and w_{k-1} is a prefix of w_k, so the word can
  // be extended by appending its own prefix of the previous length.
  std::size_t prev_len = 1;
  while (word.size() < length) {
    std::size_t cur_len = word.size();
    word.append(word, 0, std::min(prev_len, length - cur_len));
    prev_len = cur_len;
  }
  return word;
}

}  // namespace fibsub
