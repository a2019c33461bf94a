#include "ielkit/charset.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace iel {

SubsetMask mask_of(std::initializer_list<int> indices) {
    SubsetMask m;
    for (int i : indices) {
        assert(i >= 1 && i <= 32);
        m.bits |= std::uint32_t{1} << (i - 1);
    }
    return m;
}

std::vector<int> indices_of(SubsetMask m) {
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i)
        if (m.contains(i)) out.push_back(i);
    return out;
}

std::string mask_to_string(SubsetMask m) {
    std::string out = "{";
    bool first = true;
    for (int i : indices_of(m)) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += '}';
    return out;
}

std::ostream& operator<<(std::ostream& os, SubsetMask m) {
    return os << mask_to_string(m);
}

CharSet::CharSet(Arity arity, Storage storage) : arity_(arity), storage_(storage) {
    if (storage_ == Storage::Dense)
        dense_.assign(std::size_t{1} << arity_.value(), false);
}

CharSet CharSet::of(Arity arity, const std::vector<SubsetMask>& members) {
    return of(arity, members, preferred_storage(arity));
}

CharSet CharSet::of(Arity arity, const std::vector<SubsetMask>& members,
                    Storage storage) {
    CharSet s(arity, storage);
    for (SubsetMask m : members) s.insert(m);
    return s;
}

CharSet CharSet::upset(SubsetMask base, Arity arity) {
    return upset(base, arity, preferred_storage(arity));
}

CharSet CharSet::upset(SubsetMask base, Arity arity, Storage storage) {
    assert(!base.empty());
    assert(base.bits <= arity.full_mask());
    CharSet s(arity, storage);
    // Every superset of base is base | t for t a subset of the
    // complement; walk those submasks directly.
    std::uint32_t rest = arity.full_mask() & ~base.bits;
    std::uint32_t t = rest;
    while (true) {
        s.insert(SubsetMask{base.bits | t});
        if (t == 0) break;
        t = (t - 1) & rest;
    }
    return s;
}

CharSet CharSet::all_nonempty(Arity arity) {
    return all_nonempty(arity, preferred_storage(arity));
}

CharSet CharSet::all_nonempty(Arity arity, Storage storage) {
    CharSet s(arity, storage);
    for (std::uint32_t m = 1; m <= arity.full_mask(); ++m)
        s.insert(SubsetMask{m});
    return s;
}

std::vector<SubsetMask> CharSet::sorted_members() const {
    std::vector<SubsetMask> out;
    out.reserve(count_);
    for_each([&](SubsetMask m) { out.push_back(m); });
    std::sort(out.begin(), out.end());
    return out;
}

CharSet CharSet::with_storage(Storage storage) const {
    CharSet s(arity_, storage);
    for_each([&](SubsetMask m) { s.insert(m); });
    return s;
}

bool operator==(const CharSet& a, const CharSet& b) {
    if (a.arity_ != b.arity_ || a.count_ != b.count_) return false;
    bool equal = true;
    a.for_each([&](SubsetMask m) {
        if (!b.contains(m)) equal = false;
    });
    return equal;
}

namespace {

void require_same_arity(const CharSet& a, const CharSet& b) {
    if (a.arity() != b.arity())
        throw ArityMismatch("characteristic sets have arities " +
                            std::to_string(a.arity().value()) + " and " +
                            std::to_string(b.arity().value()));
}

}  // namespace

CharSet charset_union(const CharSet& a, const CharSet& b) {
    require_same_arity(a, b);
    CharSet s(a.arity(), a.storage());
    a.for_each([&](SubsetMask m) { s.insert(m); });
    b.for_each([&](SubsetMask m) { s.insert(m); });
    return s;
}

CharSet charset_inter(const CharSet& a, const CharSet& b) {
    require_same_arity(a, b);
    CharSet s(a.arity(), a.storage());
    a.for_each([&](SubsetMask m) {
        if (b.contains(m)) s.insert(m);
    });
    return s;
}

CharSet charset_compl(const CharSet& a) {
    CharSet s(a.arity(), a.storage());
    for (std::uint32_t m = 1; m <= a.arity().full_mask(); ++m)
        if (!a.contains(SubsetMask{m})) s.insert(SubsetMask{m});
    return s;
}

namespace {

// One compilation pass.  Upsets of the variables recur, so they are
// cached per call; the cache lives on the stack and needs no locking.
class Compiler {
public:
    Compiler(Arity arity, CharSet::Storage storage)
        : arity_(arity), storage_(storage),
          var_upsets_(static_cast<std::size_t>(arity.value()) + 1) {}

    CharSet compile(const Expr& e) {
        switch (e.kind()) {
            case Expr::Kind::Empty:
                return CharSet(arity_, storage_);
            case Expr::Kind::Var:
                return var_upset(e.var_index());
            case Expr::Kind::Union:
                return charset_union(compile(*e.left()), compile(*e.right()));
            case Expr::Kind::Inter:
                return charset_inter(compile(*e.left()), compile(*e.right()));
            case Expr::Kind::Compl:
                return charset_compl(compile(*e.child()));
        }
        throw Error("unreachable expression kind");
    }

private:
    const CharSet& var_upset(int index) {
        auto& slot = var_upsets_[static_cast<std::size_t>(index)];
        if (!slot)
            slot = CharSet::upset(SubsetMask{std::uint32_t{1} << (index - 1)},
                                  arity_, storage_);
        return *slot;
    }

    Arity arity_;
    CharSet::Storage storage_;
    std::vector<std::optional<CharSet>> var_upsets_;
};

}  // namespace

CharSet charset_of(const Expr& e, Arity arity) {
    return charset_of(e, arity, CharSet::preferred_storage(arity));
}

CharSet charset_of(const Expr& e, Arity arity, CharSet::Storage storage) {
    int top = max_var_index(e);
    if (top > arity.value())
        throw IndexOutOfRange("expression uses X" + std::to_string(top) +
                              " but arity is " + std::to_string(arity.value()));
    return Compiler(arity, storage).compile(e);
}

bool equivalent(const Expr& a, const Expr& b, Arity arity) {
    return charset_of(a, arity) == charset_of(b, arity);
}

std::vector<std::vector<int>> charset_to_lists(const CharSet& s) {
    std::vector<std::vector<int>> out;
    out.reserve(s.size());
    for (SubsetMask m : s.sorted_members()) out.push_back(indices_of(m));
    return out;
}

}  // namespace iel
