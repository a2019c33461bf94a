#include "ielkit/iel.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ielkit/binomial.hpp"

namespace iel {

CardinalitySet CardinalitySet::of(std::vector<int> values) {
    for (int v : values)
        if (v < 1)
            throw RangeError("cardinality " + std::to_string(v) +
                             " must be at least 1");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    CardinalitySet c;
    c.values_ = std::move(values);
    return c;
}

bool CardinalitySet::contains(int k) const {
    return std::binary_search(values_.begin(), values_.end(), k);
}

namespace {

// Next k-subset mask above v in numeric order (Gosper).  v must be
// nonzero; the caller bounds the walk by the full mask.
std::uint32_t next_same_popcount(std::uint32_t v) {
    std::uint32_t t = v | (v - 1);
    return (t + 1) |
           (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace

IelDecision decide(const CharSet& s) {
    const int n = s.arity().value();
    std::vector<std::int64_t> level_count(static_cast<std::size_t>(n) + 1, 0);
    s.for_each([&](SubsetMask m) { ++level_count[m.popcount()]; });

    int violating_k = 0;
    std::vector<int> present;
    for (int k = 1; k <= n; ++k) {
        if (level_count[k] == 0) continue;
        if (level_count[k] == binom(n, k)) {
            present.push_back(k);
        } else if (violating_k == 0) {
            violating_k = k;
        }
    }

    IelDecision d;
    if (violating_k == 0) {
        d.is_like = true;
        d.cardinalities = CardinalitySet::of(std::move(present));
        d.coefficients = coefficients(d.cardinalities, s.arity());
        return d;
    }

    // Smallest violating cardinality; within it, the numerically
    // smallest member and non-member masks.
    d.is_like = false;
    std::uint32_t full = s.arity().full_mask();
    std::uint32_t v = (std::uint32_t{1} << violating_k) - 1;
    while (v <= full) {
        bool in = s.contains(SubsetMask{v});
        if (in && !d.witness_in) d.witness_in = SubsetMask{v};
        if (!in && !d.witness_out) d.witness_out = SubsetMask{v};
        if (d.witness_in && d.witness_out) break;
        if (v == full) break;
        v = next_same_popcount(v);
    }
    return d;
}

CoeffVector coefficients(const CardinalitySet& c, Arity arity) {
    const int n = arity.value();
    if (!c.empty() && c.values().back() > n)
        throw RangeError("cardinality " + std::to_string(c.values().back()) +
                         " exceeds arity " + std::to_string(n));
    CoeffVector out(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        std::int64_t ck = 0;
        for (int j : c.values()) {
            if (j > k) break;
            std::int64_t term = binom(k, j);
            ck = (k - j) % 2 == 0 ? checked_add(ck, term)
                                  : checked_sub(ck, term);
        }
        out[static_cast<std::size_t>(k) - 1] = ck;
    }
    return out;
}

CoeffVector family_at_least(int m, Arity arity) {
    const int n = arity.value();
    if (m < 1 || m > n)
        throw RangeError("threshold " + std::to_string(m) + " outside 1.." +
                         std::to_string(n));
    CoeffVector out(static_cast<std::size_t>(n), 0);
    for (int k = m; k <= n; ++k) {
        std::int64_t term = binom(k - 1, k - m);
        out[static_cast<std::size_t>(k) - 1] =
            (k - m) % 2 == 0 ? term : -term;
    }
    return out;
}

CoeffVector family_even(Arity arity) {
    const int n = arity.value();
    CoeffVector out(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        std::int64_t term = checked_sub(checked_pow2(k - 1), 1);
        out[static_cast<std::size_t>(k) - 1] = k % 2 == 0 ? term : -term;
    }
    return out;
}

CoeffVector family_odd(Arity arity) {
    const int n = arity.value();
    CoeffVector out(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        std::int64_t term = checked_pow2(k - 1);
        out[static_cast<std::size_t>(k) - 1] = k % 2 == 1 ? term : -term;
    }
    return out;
}

}  // namespace iel
