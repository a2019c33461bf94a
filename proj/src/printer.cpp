#include <string>

#include "ielkit/expr.hpp"

namespace iel {
namespace {

// Binding strength; parenthesize a child whenever its own strength is
// below what its position requires.
constexpr int kUnionPrec = 0;
constexpr int kInterPrec = 1;
constexpr int kComplPrec = 2;
constexpr int kAtomPrec = 3;

int precedence(const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Union: return kUnionPrec;
        case Expr::Kind::Inter: return kInterPrec;
        case Expr::Kind::Compl: return kComplPrec;
        default: return kAtomPrec;
    }
}

// min_prec is the weakest operator admissible without parentheses.  The
// right operand of a binary node gets min_prec one higher than the node
// itself, so a right-nested chain of the same operator keeps its
// parentheses and the output reparses to the identical tree.
void emit(const Expr& e, int min_prec, std::string& out) {
    bool parens = precedence(e) < min_prec;
    if (parens) out += '(';
    switch (e.kind()) {
        case Expr::Kind::Empty:
            out += '0';
            break;
        case Expr::Kind::Var:
            out += 'X';
            out += std::to_string(e.var_index());
            break;
        case Expr::Kind::Union:
            emit(*e.left(), kUnionPrec, out);
            out += " | ";
            emit(*e.right(), kUnionPrec + 1, out);
            break;
        case Expr::Kind::Inter:
            emit(*e.left(), kInterPrec, out);
            out += " & ";
            emit(*e.right(), kInterPrec + 1, out);
            break;
        case Expr::Kind::Compl:
            out += '!';
            emit(*e.child(), kComplPrec, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string print(const Expr& e) {
    std::string out;
    emit(e, kUnionPrec, out);
    return out;
}

}  // namespace iel
