#include "ielkit/eval.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ielkit/binomial.hpp"

namespace iel {

SetSequence make_sequence(const std::vector<std::vector<int>>& lists) {
    return make_sequence(lists, kDefaultMaxArity);
}

SetSequence make_sequence(const std::vector<std::vector<int>>& lists, int cap) {
    Arity arity(static_cast<int>(lists.size()), cap);
    SetSequence a{arity, {}};
    a.sets.reserve(lists.size());
    for (const auto& list : lists) {
        ElementSet s;
        for (int x : list) {
            if (x < 0)
                throw RangeError("element " + std::to_string(x) +
                                 " must be nonnegative");
            s.insert(x);
        }
        a.sets.push_back(std::move(s));
    }
    return a;
}

ElementSet sequence_union(const SetSequence& a) {
    ElementSet u;
    for (const ElementSet& s : a.sets) u.insert(s.begin(), s.end());
    return u;
}

std::vector<std::pair<int, SubsetMask>> signatures(const SetSequence& a) {
    std::map<int, SubsetMask> sig;
    for (int i = 1; i <= a.arity.value(); ++i)
        for (int x : a.sets[static_cast<std::size_t>(i) - 1])
            sig[x].bits |= std::uint32_t{1} << (i - 1);
    return {sig.begin(), sig.end()};
}

namespace {

ElementSet eval_rec(const Expr& e, const SetSequence& a, const ElementSet& u) {
    switch (e.kind()) {
        case Expr::Kind::Empty:
            return {};
        case Expr::Kind::Var:
            return a.sets[static_cast<std::size_t>(e.var_index()) - 1];
        case Expr::Kind::Union: {
            ElementSet l = eval_rec(*e.left(), a, u);
            ElementSet r = eval_rec(*e.right(), a, u);
            l.insert(r.begin(), r.end());
            return l;
        }
        case Expr::Kind::Inter: {
            ElementSet l = eval_rec(*e.left(), a, u);
            ElementSet r = eval_rec(*e.right(), a, u);
            ElementSet out;
            std::set_intersection(l.begin(), l.end(), r.begin(), r.end(),
                                  std::inserter(out, out.end()));
            return out;
        }
        case Expr::Kind::Compl: {
            // Complement is taken within A_1 | ... | A_n.
            ElementSet c = eval_rec(*e.child(), a, u);
            ElementSet out;
            std::set_difference(u.begin(), u.end(), c.begin(), c.end(),
                                std::inserter(out, out.end()));
            return out;
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

ElementSet eval_expr(const Expr& e, const SetSequence& a) {
    int top = max_var_index(e);
    if (top > a.arity.value())
        throw IndexOutOfRange("expression uses X" + std::to_string(top) +
                              " but the sequence has " +
                              std::to_string(a.arity.value()) + " sets");
    return eval_rec(e, a, sequence_union(a));
}

ElementSet eval_charset(const CharSet& s, const SetSequence& a) {
    if (s.arity() != a.arity)
        throw ArityMismatch("characteristic set arity " +
                            std::to_string(s.arity().value()) +
                            " does not match sequence arity " +
                            std::to_string(a.arity.value()));
    ElementSet out;
    for (auto [x, sig] : signatures(a))
        if (s.contains(sig)) out.insert(x);
    return out;
}

StatVector i_vector(const SetSequence& a) {
    const int n = a.arity.value();
    StatVector v(static_cast<std::size_t>(n), 0);
    // An element with signature of size j lies in C(j,k) of the k-wise
    // intersections, so summing C(j,k) over elements gives i_{n,k}.
    for (auto [x, sig] : signatures(a)) {
        (void)x;
        int j = sig.popcount();
        for (int k = 1; k <= j; ++k)
            v[static_cast<std::size_t>(k) - 1] =
                checked_add(v[static_cast<std::size_t>(k) - 1], binom(j, k));
    }
    return v;
}

StatVector sigma_vector(const SetSequence& a) {
    const int n = a.arity.value();
    StatVector v(static_cast<std::size_t>(n), 0);
    for (auto [x, sig] : signatures(a)) {
        (void)x;
        ++v[static_cast<std::size_t>(sig.popcount()) - 1];
    }
    return v;
}

SetSequence indicator_sequence(SubsetMask index_set, Arity arity) {
    if (index_set.empty())
        throw EmptyIndexError("indicator sequence needs a nonempty index set");
    if (index_set.bits > arity.full_mask())
        throw RangeError("index set " + mask_to_string(index_set) +
                         " exceeds arity " + std::to_string(arity.value()));
    SetSequence a{arity, {}};
    a.sets.resize(static_cast<std::size_t>(arity.value()));
    for (int i = 1; i <= arity.value(); ++i)
        if (index_set.contains(i))
            a.sets[static_cast<std::size_t>(i) - 1] = {1};
    return a;
}

bool check_identity(const CharSet& s, const CoeffVector& coeffs,
                    const SetSequence& a) {
    if (s.arity() != a.arity)
        throw ArityMismatch("characteristic set arity " +
                            std::to_string(s.arity().value()) +
                            " does not match sequence arity " +
                            std::to_string(a.arity.value()));
    if (coeffs.size() != static_cast<std::size_t>(a.arity.value()))
        throw ArityMismatch("coefficient vector has " +
                            std::to_string(coeffs.size()) +
                            " entries but the sequence has " +
                            std::to_string(a.arity.value()) + " sets");
    StatVector iv = i_vector(a);
    std::int64_t rhs = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        rhs = checked_add(rhs, checked_mul(coeffs[k], iv[k]));
    std::int64_t lhs = static_cast<std::int64_t>(eval_charset(s, a).size());
    return lhs == rhs;
}

SetSequence random_sequence(Arity arity, int universe, std::mt19937& rng) {
    if (universe < 1 || universe > 16)
        throw RangeError("universe size " + std::to_string(universe) +
                         " outside 1..16");
    SetSequence a{arity, {}};
    a.sets.resize(static_cast<std::size_t>(arity.value()));
    // One raw bit per (set, element) pair; avoiding the standard
    // distributions keeps the draw identical across implementations.
    for (int i = 0; i < arity.value(); ++i)
        for (int x = 1; x <= universe; ++x)
            if (rng() & 1u) a.sets[static_cast<std::size_t>(i)].insert(x);
    return a;
}

}  // namespace iel
