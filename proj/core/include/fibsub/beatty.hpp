#pragma once

#include <cstdint>
#include <string>

// Float-free generators and membership predicates for the Wythoff/Beatty
// sequences. lower_wythoff(n) = floor(n*phi) and upper_wythoff(n) =
// floor(n*phi^2) are evaluated with integer square roots only, so results
// are exact for every n up to 2^62; no floating-point representation of
// phi exists anywhere in the library.

namespace fibsub {

// floor(n * phi), n >= 1, computed as floor((n + isqrt(5 n^2)) / 2).
// Throws std::overflow_error for n >= 2^62.
std::uint64_t lower_wythoff(std::uint64_t n);

// floor(n * phi^2) = n + lower_wythoff(n).
std::uint64_t upper_wythoff(std::uint64_t n);

// The composed sequence value 2 * lower_wythoff(n) + n
// (= lower_wythoff(upper_wythoff(n))).
std::uint64_t ab(std::uint64_t n);

// x is a lower-Wythoff value iff the smallest index in its Zeckendorf
// expansion is even. Requires x >= 1.
bool in_lower_wythoff(std::uint64_t x);

// Complement of in_lower_wythoff over the positive integers.
bool in_upper_wythoff(std::uint64_t x);

// Prefix of the fixed point of a->ab, b->a, starting from "a".
// Position k (1-based) holds 'a' exactly when k is a lower-Wythoff value.
std::string fibonacci_word(std::size_t length);

}  // namespace fibsub
