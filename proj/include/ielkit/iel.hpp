#ifndef IELKIT_IEL_HPP
#define IELKIT_IEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ielkit/arity.hpp"
#include "ielkit/charset.hpp"
#include "ielkit/errors.hpp"

namespace iel {

// Coefficient vector (c_1..c_n); element k-1 multiplies i_{n,k}.
using CoeffVector = std::vector<std::int64_t>;

// A set of cardinalities C, a subset of {1..n} kept as a sorted vector.
class CardinalitySet {
public:
    CardinalitySet() = default;
    static CardinalitySet of(std::vector<int> values);

    bool contains(int k) const;
    const std::vector<int>& values() const { return values_; }
    bool empty() const { return values_.empty(); }

    friend bool operator==(const CardinalitySet&, const CardinalitySet&) = default;

private:
    std::vector<int> values_;
};

// Outcome of the inclusion-exclusion-likeness test.  Exactly one of the
// two halves is populated: cardinalities/coefficients when is_like,
// witness_in/witness_out otherwise.
struct IelDecision {
    bool is_like = false;
    CardinalitySet cardinalities;
    CoeffVector coefficients;
    std::optional<SubsetMask> witness_in;
    std::optional<SubsetMask> witness_out;
};

// Test whether a characteristic set is level-complete: for each k, it
// contains either none or all of the k-subsets.  On failure the
// witnesses are the canonical pair at the smallest violating k: the
// numerically smallest member mask and smallest non-member mask.
IelDecision decide(const CharSet& s);

// c_k = sum_{j in C, j<=k} (-1)^(k-j) C(k,j) for k = 1..n.
CoeffVector coefficients(const CardinalitySet& c, Arity arity);

// Closed-form families.  at-least-m: c_k = (-1)^(k-m) C(k-1, k-m) for
// k >= m; even: c_k = (-1)^k (2^(k-1) - 1); odd: c_k = (-1)^(k-1) 2^(k-1).
CoeffVector family_at_least(int m, Arity arity);
CoeffVector family_even(Arity arity);
CoeffVector family_odd(Arity arity);

}  // namespace iel

#endif  // IELKIT_IEL_HPP
