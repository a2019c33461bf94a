#include <doctest.h>

#include <random>

#include "ielkit/expr.hpp"
#include "support.hpp"

using iel::Arity;
using iel::Expr;
using iel::ExprPtr;

namespace {

ExprPtr p3(const std::string& text) { return iel::parse(text, Arity(3)); }

}  // namespace

TEST_CASE("parser builds the expected shapes") {
    ExprPtr e = p3("X1|X2");
    REQUIRE(e->kind() == Expr::Kind::Union);
    CHECK(e->left()->kind() == Expr::Kind::Var);
    CHECK(e->left()->var_index() == 1);
    CHECK(e->right()->var_index() == 2);

    CHECK(iel::structurally_equal(*p3("∅"), *p3("0")));
    CHECK(p3("0")->kind() == Expr::Kind::Empty);
}

TEST_CASE("intersection binds tighter than union") {
    ExprPtr e = p3("X1|X2&X3");
    REQUIRE(e->kind() == Expr::Kind::Union);
    CHECK(e->left()->var_index() == 1);
    CHECK(e->right()->kind() == Expr::Kind::Inter);
}

TEST_CASE("binary operators associate to the left") {
    ExprPtr e = p3("X1|X2|X3");
    REQUIRE(e->kind() == Expr::Kind::Union);
    CHECK(e->left()->kind() == Expr::Kind::Union);
    CHECK(e->right()->var_index() == 3);

    ExprPtr t = p3("X1&X2&X3");
    REQUIRE(t->kind() == Expr::Kind::Inter);
    CHECK(t->left()->kind() == Expr::Kind::Inter);
}

TEST_CASE("complement binds tighter than intersection") {
    ExprPtr e = p3("!X1&X2");
    REQUIRE(e->kind() == Expr::Kind::Inter);
    CHECK(e->left()->kind() == Expr::Kind::Compl);
    CHECK(e->right()->var_index() == 2);

    CHECK(p3("!(X1&X2)")->kind() == Expr::Kind::Compl);
    CHECK(p3("!!X1")->child()->kind() == Expr::Kind::Compl);
}

TEST_CASE("postfix prime is a complement") {
    CHECK(iel::structurally_equal(*p3("X1'"), *p3("!X1")));
    CHECK(iel::structurally_equal(*p3("X1''"), *p3("!!X1")));
    CHECK(iel::structurally_equal(*p3("(X1|X2)'"), *p3("!(X1|X2)")));
    // The prime applies to the atom, the bang to the whole factor.
    CHECK(iel::structurally_equal(*p3("!X1'"), *p3("!(!X1)")));
}

TEST_CASE("unicode operator spellings are aliases") {
    CHECK(iel::structurally_equal(*p3("X1 ∪ X2 ∩ ∅"), *p3("X1 | X2 & 0")));
    CHECK(iel::structurally_equal(*p3("(X1 ∩ X2) ∪ X3"), *p3("(X1 & X2) | X3")));
}

TEST_CASE("whitespace is insignificant") {
    CHECK(iel::structurally_equal(*p3("  X1 \t|\n X2  "), *p3("X1|X2")));
}

TEST_CASE("syntax errors carry the offending offset") {
    CHECK_THROWS_AS(p3(""), iel::SyntaxError);
    CHECK_THROWS_AS(p3("X1 |"), iel::SyntaxError);
    CHECK_THROWS_AS(p3("(X1"), iel::SyntaxError);
    CHECK_THROWS_AS(p3("X"), iel::SyntaxError);
    CHECK_THROWS_AS(p3("X1 X2"), iel::SyntaxError);
    CHECK_THROWS_AS(p3("#"), iel::SyntaxError);
    CHECK_THROWS_AS(p3("|X1"), iel::SyntaxError);

    try {
        p3("X1 | #");
        FAIL("expected SyntaxError");
    } catch (const iel::SyntaxError& e) {
        CHECK(e.offset() == 5);
    }
    try {
        p3("X1 X2");
        FAIL("expected SyntaxError");
    } catch (const iel::SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("variable indices are range-checked at parse time") {
    CHECK_THROWS_AS(p3("X0"), iel::IndexOutOfRange);
    CHECK_THROWS_AS(p3("X4"), iel::IndexOutOfRange);
    CHECK_NOTHROW(iel::parse("X4", Arity(4)));
    // Absurdly long subscripts must not wrap around into range.
    CHECK_THROWS_AS(p3("X99999999999999999999"), iel::IndexOutOfRange);
}

TEST_CASE("printer emits canonical text") {
    auto v = [](int i) { return Expr::var(i); };
    CHECK(iel::print(*Expr::empty()) == "0");
    CHECK(iel::print(*v(7)) == "X7");
    CHECK(iel::print(*Expr::union_of(Expr::union_of(v(1), v(2)), v(3))) ==
          "X1 | X2 | X3");
    CHECK(iel::print(*Expr::union_of(v(1), Expr::union_of(v(2), v(3)))) ==
          "X1 | (X2 | X3)");
    CHECK(iel::print(*Expr::union_of(v(1), Expr::inter_of(v(2), v(3)))) ==
          "X1 | X2 & X3");
    CHECK(iel::print(*Expr::inter_of(Expr::union_of(v(1), v(2)), v(3))) ==
          "(X1 | X2) & X3");
    CHECK(iel::print(*Expr::compl_of(Expr::union_of(v(1), v(2)))) ==
          "!(X1 | X2)");
    CHECK(iel::print(*Expr::inter_of(Expr::compl_of(v(1)), v(2))) ==
          "!X1 & X2");
    CHECK(iel::print(*Expr::compl_of(Expr::compl_of(v(1)))) == "!!X1");
}

TEST_CASE("print and parse are mutually inverse") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        ExprPtr e = testsupport::random_expr(rng, n, 8);
        std::string text = iel::print(*e);
        ExprPtr back = iel::parse(text, Arity(n));
        CHECK(iel::structurally_equal(*e, *back));
        CHECK(iel::print(*back) == text);
        // Parsing is deterministic: a second pass builds the same tree.
        CHECK(iel::structurally_equal(*back, *iel::parse(text, Arity(n))));
    }
}

TEST_CASE("max_var_index scans the whole tree") {
    CHECK(iel::max_var_index(*Expr::empty()) == 0);
    CHECK(iel::max_var_index(*p3("X2")) == 2);
    CHECK(iel::max_var_index(*p3("!(X1 & (X3 | 0)) | X2")) == 3);
}

TEST_CASE("structural equality distinguishes shape and indices") {
    CHECK(iel::structurally_equal(*p3("X1|X2"), *p3("X1 | X2")));
    CHECK_FALSE(iel::structurally_equal(*p3("X1|X2"), *p3("X2|X1")));
    CHECK_FALSE(iel::structurally_equal(*p3("X1|X2"), *p3("X1&X2")));
    CHECK_FALSE(iel::structurally_equal(*p3("X1"), *p3("!X1")));
}
