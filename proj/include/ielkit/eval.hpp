#ifndef IELKIT_EVAL_HPP
#define IELKIT_EVAL_HPP

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ielkit/arity.hpp"
#include "ielkit/charset.hpp"
#include "ielkit/errors.hpp"
#include "ielkit/expr.hpp"
#include "ielkit/iel.hpp"

namespace iel {

// Concrete finite sets of nonnegative integer elements.
using ElementSet = std::set<int>;

// Statistic vector indexed by cardinality: element k-1 is the value at
// k, for k = 1..n.
using StatVector = std::vector<std::int64_t>;

// A concrete assignment (A_1..A_n) for the variables.
struct SetSequence {
    Arity arity;
    std::vector<ElementSet> sets;
};

// Build a sequence from element lists; arity is the list count.
SetSequence make_sequence(const std::vector<std::vector<int>>& lists);
SetSequence make_sequence(const std::vector<std::vector<int>>& lists, int cap);

// A_1 | ... | A_n: the universe every complement is taken against.
ElementSet sequence_union(const SetSequence& a);

// Each distinct element of the universe with its membership signature:
// the mask of indices i with x in A_i.  Ascending element order.
std::vector<std::pair<int, SubsetMask>> signatures(const SetSequence& a);

// Evaluate an expression on concrete sets.  Variables above the
// sequence arity throw IndexOutOfRange.
ElementSet eval_expr(const Expr& e, const SetSequence& a);

// Elements whose signature lies in the characteristic set.  For the
// compiled set of an expression this equals eval_expr on it.
ElementSet eval_charset(const CharSet& s, const SetSequence& a);

// i_{n,k}(A) = sum over |I|=k of |A_{i1} & ... & A_{ik}|, k = 1..n.
StatVector i_vector(const SetSequence& a);

// sigma_{n,k}(A) = number of elements lying in exactly k of the sets.
StatVector sigma_vector(const SetSequence& a);

// ^I A: A_k = {1} when k in I, empty otherwise.  I must be nonempty.
SetSequence indicator_sequence(SubsetMask index_set, Arity arity);

// Check |eval_charset(s, a)| == sum_k c_k * i_{n,k}(a) exactly.
bool check_identity(const CharSet& s, const CoeffVector& coeffs,
                    const SetSequence& a);

// Random sequence over elements 1..universe; each membership decided by
// one low bit of the generator so results are identical across
// platforms.  universe must be 1..16.
SetSequence random_sequence(Arity arity, int universe, std::mt19937& rng);

}  // namespace iel

#endif  // IELKIT_EVAL_HPP
