#ifndef IELKIT_EXPR_HPP
#define IELKIT_EXPR_HPP

#include <memory>
#include <string>

#include "ielkit/arity.hpp"
#include "ielkit/errors.hpp"

namespace iel {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree over set variables X1..Xn.  Nodes are shared
// freely; there is no mutation after construction.
class Expr {
public:
    enum class Kind { Empty, Var, Union, Inter, Compl };

    static ExprPtr empty();
    // index is 1-based and must be >= 1; the upper bound is checked
    // against a concrete arity only when the tree is compiled/evaluated.
    static ExprPtr var(int index);
    static ExprPtr union_of(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr inter_of(ExprPtr lhs, ExprPtr rhs);
    static ExprPtr compl_of(ExprPtr operand);

    Kind kind() const { return kind_; }

    // Valid only for Var nodes.
    int var_index() const { return index_; }

    // Valid only for Union/Inter nodes.
    const ExprPtr& left() const { return lhs_; }
    const ExprPtr& right() const { return rhs_; }

    // Valid only for Compl nodes.
    const ExprPtr& child() const { return lhs_; }

private:
    Expr(Kind kind, int index, ExprPtr lhs, ExprPtr rhs)
        : kind_(kind), index_(index), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

    Kind kind_;
    int index_;
    ExprPtr lhs_;
    ExprPtr rhs_;
};

// Structural identity: same shape, same variable indices.
bool structurally_equal(const Expr& a, const Expr& b);

// Largest variable index appearing in the tree, 0 if there is none.
int max_var_index(const Expr& e);

// Parse expression text into a tree.  Variable indices must lie in
// 1..arity.value().  Throws SyntaxError / IndexOutOfRange.
ExprPtr parse(const std::string& text, Arity arity);

// Render a tree back to text.  Parses back to a structurally equal tree.
std::string print(const Expr& e);

}  // namespace iel

#endif  // IELKIT_EXPR_HPP
