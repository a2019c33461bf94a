#ifndef IELKIT_BINOMIAL_HPP
#define IELKIT_BINOMIAL_HPP

#include <cstdint>
#include <vector>

#include "ielkit/errors.hpp"

namespace iel {

// int64 arithmetic that throws OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// 2^k as int64; k must be 0..62.
std::int64_t checked_pow2(int k);

// Binomial coefficient C(m, k); zero when k > m, RangeError when either
// argument is negative, OverflowError when the value does not fit.
std::int64_t binom(std::int64_t m, std::int64_t k);

// Forward binomial transform: a_k = sum_{j>=k} C(j,k) b_j, 0-indexed.
std::vector<std::int64_t> binomial_forward(const std::vector<std::int64_t>& b);

// Inverse transform: b_k = sum_{j>=k} (-1)^(j-k) C(j,k) a_j.  Inverts
// binomial_forward exactly.
std::vector<std::int64_t> binomial_inverse(const std::vector<std::int64_t>& a);

}  // namespace iel

#endif  // IELKIT_BINOMIAL_HPP
