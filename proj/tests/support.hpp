#ifndef IELKIT_TESTS_SUPPORT_HPP
#define IELKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "ielkit/eval.hpp"
#include "ielkit/expr.hpp"

namespace testsupport {

// Random expression over X1..Xn_vars with nesting bounded by max_depth.
iel::ExprPtr random_expr(std::mt19937& rng, int n_vars, int max_depth);

// Pascal-triangle binomials, independent of the library implementation.
std::int64_t binom_pascal(int m, int k);

// i_{n,k} straight from the definition: enumerate every k-subset,
// intersect the chosen sets, add up the sizes.  Independent of the
// signature-counting algorithm in the library.
iel::StatVector i_vector_naive(const iel::SetSequence& a);

// One element per nonempty subset of {1..n}: element j lies in A_i iff
// bit i-1 of j is set, so the signature of j is j itself.
iel::SetSequence generic_sequence(iel::Arity arity);

}  // namespace testsupport

#endif  // IELKIT_TESTS_SUPPORT_HPP
