#include "ielkit/expr.hpp"

#include <cassert>

namespace iel {

ExprPtr Expr::empty() {
    return ExprPtr(new Expr(Kind::Empty, 0, nullptr, nullptr));
}

ExprPtr Expr::var(int index) {
    assert(index >= 1);
    return ExprPtr(new Expr(Kind::Var, index, nullptr, nullptr));
}

ExprPtr Expr::union_of(ExprPtr lhs, ExprPtr rhs) {
    assert(lhs && rhs);
    return ExprPtr(new Expr(Kind::Union, 0, std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::inter_of(ExprPtr lhs, ExprPtr rhs) {
    assert(lhs && rhs);
    return ExprPtr(new Expr(Kind::Inter, 0, std::move(lhs), std::move(rhs)));
}

ExprPtr Expr::compl_of(ExprPtr operand) {
    assert(operand);
    return ExprPtr(new Expr(Kind::Compl, 0, std::move(operand), nullptr));
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Expr::Kind::Empty:
            return true;
        case Expr::Kind::Var:
            return a.var_index() == b.var_index();
        case Expr::Kind::Union:
        case Expr::Kind::Inter:
            return structurally_equal(*a.left(), *b.left()) &&
                   structurally_equal(*a.right(), *b.right());
        case Expr::Kind::Compl:
            return structurally_equal(*a.child(), *b.child());
    }
    return false;
}

int max_var_index(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Empty:
            return 0;
        case Expr::Kind::Var:
            return e.var_index();
        case Expr::Kind::Union:
        case Expr::Kind::Inter: {
            int l = max_var_index(*e.left());
            int r = max_var_index(*e.right());
            return l > r ? l : r;
        }
        case Expr::Kind::Compl:
            return max_var_index(*e.child());
    }
    return 0;
}

}  // namespace iel
