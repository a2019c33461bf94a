#ifndef IELKIT_CHARSET_HPP
#define IELKIT_CHARSET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "ielkit/arity.hpp"
#include "ielkit/errors.hpp"
#include "ielkit/expr.hpp"

namespace iel {

// A subset of {1..n} packed into a 32-bit mask; bit i-1 stands for
// index i.  Mask value order doubles as the canonical ordering.
struct SubsetMask {
    std::uint32_t bits = 0;

    int popcount() const { return std::popcount(bits); }
    bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
    bool empty() const { return bits == 0; }

    friend auto operator<=>(SubsetMask, SubsetMask) = default;
};

// Mask from 1-based indices.
SubsetMask mask_of(std::initializer_list<int> indices);
// Ascending 1-based indices of a mask.
std::vector<int> indices_of(SubsetMask m);
// "{1,3}" or "{}" for display in diagnostics.
std::string mask_to_string(SubsetMask m);
std::ostream& operator<<(std::ostream& os, SubsetMask m);

// Characteristic set: a set of nonempty subsets of {1..n}.  Two storage
// schemes with identical behaviour; Dense keeps a 2^n bit array and is
// the default for small n, Sparse hashes the masks.
class CharSet {
public:
    enum class Storage { Sparse, Dense };

    // Dense tables stay small up to here (2^16 bits); beyond, hash.
    static constexpr int kDenseArityLimit = 16;
    static Storage preferred_storage(Arity arity) {
        return arity.value() <= kDenseArityLimit ? Storage::Dense : Storage::Sparse;
    }

    explicit CharSet(Arity arity) : CharSet(arity, preferred_storage(arity)) {}
    CharSet(Arity arity, Storage storage);

    static CharSet of(Arity arity, const std::vector<SubsetMask>& members);
    static CharSet of(Arity arity, const std::vector<SubsetMask>& members,
                      Storage storage);

    // All supersets of base within {1..n}: the characteristic set of a
    // variable X_i is upset of {i}.  base must be nonempty.
    static CharSet upset(SubsetMask base, Arity arity);
    static CharSet upset(SubsetMask base, Arity arity, Storage storage);

    // Every nonempty subset of {1..n}.
    static CharSet all_nonempty(Arity arity);
    static CharSet all_nonempty(Arity arity, Storage storage);

    Arity arity() const { return arity_; }
    Storage storage() const { return storage_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(SubsetMask m) const {
        if (storage_ == Storage::Dense) return dense_[m.bits];
        return sparse_.count(m.bits) != 0;
    }

    void insert(SubsetMask m) {
        assert(!m.empty());
        assert(m.bits <= arity_.full_mask());
        if (storage_ == Storage::Dense) {
            if (!dense_[m.bits]) {
                dense_[m.bits] = true;
                ++count_;
            }
        } else {
            count_ += sparse_.insert(m.bits).second ? 1 : 0;
        }
    }

    // Members in ascending mask order.
    std::vector<SubsetMask> sorted_members() const;

    // Visit every member; order is unspecified (Dense happens to scan
    // ascending, Sparse follows the hash table).
    template <typename Fn>
    void for_each(Fn&& fn) const {
        if (storage_ == Storage::Dense) {
            for (std::uint32_t m = 1; m < dense_.size(); ++m)
                if (dense_[m]) fn(SubsetMask{m});
        } else {
            for (std::uint32_t m : sparse_) fn(SubsetMask{m});
        }
    }

    // Same contents under the other (or same) scheme.
    CharSet with_storage(Storage storage) const;

    // Content equality, independent of storage scheme.
    friend bool operator==(const CharSet& a, const CharSet& b);
    friend bool operator!=(const CharSet& a, const CharSet& b) { return !(a == b); }

private:
    Arity arity_;
    Storage storage_;
    std::unordered_set<std::uint32_t> sparse_;
    std::vector<bool> dense_;
    std::size_t count_ = 0;
};

// Set algebra on characteristic sets.  Operands must share an arity;
// the result inherits the left operand's storage scheme.
CharSet charset_union(const CharSet& a, const CharSet& b);
CharSet charset_inter(const CharSet& a, const CharSet& b);
// Complement within the nonempty subsets of {1..n}.
CharSet charset_compl(const CharSet& a);

// Compile an expression to its characteristic set.
CharSet charset_of(const Expr& e, Arity arity);
CharSet charset_of(const Expr& e, Arity arity, CharSet::Storage storage);

// Extensional equivalence: equal characteristic sets at arity n.
bool equivalent(const Expr& a, const Expr& b, Arity arity);

// Canonical nested-list form: members ascending by mask value, each as
// ascending 1-based indices.
std::vector<std::vector<int>> charset_to_lists(const CharSet& s);

}  // namespace iel

#endif  // IELKIT_CHARSET_HPP
