#include "support.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <vector>

namespace testsupport {

iel::ExprPtr random_expr(std::mt19937& rng, int n_vars, int max_depth) {
    auto leaf = [&]() -> iel::ExprPtr {
        if (rng() % 10 == 0) return iel::Expr::empty();
        return iel::Expr::var(1 + static_cast<int>(rng() % n_vars));
    };
    if (max_depth == 0 || rng() % 5 == 0) return leaf();
    switch (rng() % 4) {
        case 0:
            return iel::Expr::union_of(random_expr(rng, n_vars, max_depth - 1),
                                       random_expr(rng, n_vars, max_depth - 1));
        case 1:
            return iel::Expr::inter_of(random_expr(rng, n_vars, max_depth - 1),
                                       random_expr(rng, n_vars, max_depth - 1));
        case 2:
            return iel::Expr::compl_of(random_expr(rng, n_vars, max_depth - 1));
        default:
            return leaf();
    }
}

std::int64_t binom_pascal(int m, int k) {
    assert(m >= 0 && k >= 0);
    if (k > m) return 0;
    static std::vector<std::vector<std::int64_t>> table{{1}};
    while (static_cast<int>(table.size()) <= m) {
        const auto& prev = table.back();
        std::vector<std::int64_t> row(table.size() + 1, 1);
        for (std::size_t j = 1; j < prev.size(); ++j)
            row[j] = prev[j - 1] + prev[j];
        table.push_back(std::move(row));
    }
    return table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

iel::StatVector i_vector_naive(const iel::SetSequence& a) {
    const int n = a.arity.value();
    iel::StatVector v(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k) {
        // std::next_permutation over a sorted selector visits every
        // k-subset of the n positions exactly once.
        std::vector<char> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.end() - k, pick.end(), 1);
        do {
            iel::ElementSet inter;
            bool first = true;
            for (int i = 0; i < n; ++i) {
                if (!pick[static_cast<std::size_t>(i)]) continue;
                if (first) {
                    inter = a.sets[static_cast<std::size_t>(i)];
                    first = false;
                } else {
                    iel::ElementSet tmp;
                    std::set_intersection(
                        inter.begin(), inter.end(),
                        a.sets[static_cast<std::size_t>(i)].begin(),
                        a.sets[static_cast<std::size_t>(i)].end(),
                        std::inserter(tmp, tmp.end()));
                    inter = std::move(tmp);
                }
            }
            v[static_cast<std::size_t>(k) - 1] +=
                static_cast<std::int64_t>(inter.size());
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return v;
}

iel::SetSequence generic_sequence(iel::Arity arity) {
    const int n = arity.value();
    iel::SetSequence a{arity, {}};
    a.sets.resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= static_cast<int>(arity.full_mask()); ++j)
        for (int i = 1; i <= n; ++i)
            if ((j >> (i - 1)) & 1)
                a.sets[static_cast<std::size_t>(i) - 1].insert(j);
    return a;
}

}  // namespace testsupport
