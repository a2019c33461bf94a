#ifndef IELKIT_ARITY_HPP
#define IELKIT_ARITY_HPP

#include <cstdint>
#include <string>

#include "ielkit/errors.hpp"

namespace iel {

// Default ceiling for the number of variables.  Tools may raise it up to
// kMaxSupportedArity; beyond that subset masks no longer fit comfortably
// in 32 bits and enumeration is hopeless anyway.
inline constexpr int kDefaultMaxArity = 20;
inline constexpr int kMaxSupportedArity = 26;

// Validated number of variables n.  Every structure that depends on n
// (characteristic sets, sequences, coefficient vectors) carries one of
// these so mismatches are caught at construction time.
class Arity {
public:
    explicit Arity(int n, int cap = kDefaultMaxArity) : n_(n) {
        if (cap < 1 || cap > kMaxSupportedArity)
            throw ArityError("arity cap " + std::to_string(cap) +
                             " outside 1.." + std::to_string(kMaxSupportedArity));
        if (n < 1 || n > cap)
            throw ArityError("arity " + std::to_string(n) + " outside 1.." +
                             std::to_string(cap));
    }

    int value() const { return n_; }

    // Bitmask with bits 0..n-1 set; bit i-1 stands for index i.
    std::uint32_t full_mask() const {
        return (n_ == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n_) - 1);
    }

    friend bool operator==(Arity a, Arity b) { return a.n_ == b.n_; }
    friend bool operator!=(Arity a, Arity b) { return a.n_ != b.n_; }

private:
    int n_;
};

}  // namespace iel

#endif  // IELKIT_ARITY_HPP
