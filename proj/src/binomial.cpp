#include "ielkit/binomial.hpp"

#include <cstddef>
#include <limits>
#include <string>

namespace iel {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

std::int64_t checked_pow2(int k) {
    if (k < 0) throw RangeError("negative exponent " + std::to_string(k));
    if (k >= 63) throw OverflowError("2^" + std::to_string(k) + " exceeds int64");
    return std::int64_t{1} << k;
}

std::int64_t binom(std::int64_t m, std::int64_t k) {
    if (m < 0 || k < 0)
        throw RangeError("binomial arguments must be nonnegative, got C(" +
                         std::to_string(m) + "," + std::to_string(k) + ")");
    if (k > m) return 0;
    if (k > m - k) k = m - k;
    // After step i the accumulator equals C(m-k+i, i) exactly, and that
    // sequence is nondecreasing, so checking the int64 bound per step
    // throws precisely when the final value does not fit.
    constexpr auto limit =
        static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max());
    unsigned __int128 res = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        res = res * static_cast<unsigned __int128>(m - k + i) /
              static_cast<unsigned __int128>(i);
        if (res > limit)
            throw OverflowError("C(" + std::to_string(m) + "," +
                                std::to_string(k) + ") exceeds int64");
    }
    return static_cast<std::int64_t>(res);
}

std::vector<std::int64_t> binomial_forward(const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> a(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t j = k; j < b.size(); ++j)
            a[k] = checked_add(
                a[k], checked_mul(binom(static_cast<std::int64_t>(j),
                                        static_cast<std::int64_t>(k)),
                                  b[j]));
    return a;
}

std::vector<std::int64_t> binomial_inverse(const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> b(a.size(), 0);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t j = k; j < a.size(); ++j) {
            std::int64_t term = checked_mul(
                binom(static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)),
                a[j]);
            b[k] = (j - k) % 2 == 0 ? checked_add(b[k], term)
                                    : checked_sub(b[k], term);
        }
    return b;
}

}  // namespace iel
