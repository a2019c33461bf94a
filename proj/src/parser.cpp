#include <cstddef>
#include <string>
#include <vector>

#include "ielkit/expr.hpp"

// Grammar (ASCII and Unicode operator spellings are interchangeable):
//
//   expr     = term { ("|" | "∪") term }
//   term     = factor { ("&" | "∩") factor }
//   factor   = ("!" factor) | postfix
//   postfix  = atom { "'" }
//   atom     = "0" | "∅" | variable | "(" expr ")"
//   variable = "X" digit { digit }
//
// Precedence from loosest to tightest: union, intersection, complement.
// Both binary operators associate to the left.

namespace iel {
namespace {

enum class Tok { Union, Inter, Bang, Prime, Empty, Var, LParen, RParen, End };

struct Token {
    Tok type;
    std::size_t offset;
    int index = 0;  // Var only
};

const char* token_name(Tok t) {
    switch (t) {
        case Tok::Union: return "'|'";
        case Tok::Inter: return "'&'";
        case Tok::Bang: return "'!'";
        case Tok::Prime: return "'''";
        case Tok::Empty: return "'0'";
        case Tok::Var: return "variable";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

// Variable subscripts larger than this are out of range for every
// supported arity; capping the accumulator keeps it from overflowing.
constexpr long long kIndexClamp = 1000000;

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            std::size_t start = pos_;
            unsigned char c = static_cast<unsigned char>(text_[pos_]);
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                ++pos_;
                continue;
            }
            switch (c) {
                case '|': out.push_back({Tok::Union, start}); ++pos_; continue;
                case '&': out.push_back({Tok::Inter, start}); ++pos_; continue;
                case '!': out.push_back({Tok::Bang, start}); ++pos_; continue;
                case '\'': out.push_back({Tok::Prime, start}); ++pos_; continue;
                case '0': out.push_back({Tok::Empty, start}); ++pos_; continue;
                case '(': out.push_back({Tok::LParen, start}); ++pos_; continue;
                case ')': out.push_back({Tok::RParen, start}); ++pos_; continue;
                case 'X': out.push_back(lex_var(start)); continue;
                default: break;
            }
            if (Tok alias; lex_unicode(c, alias)) {
                out.push_back({alias, start});
                continue;
            }
            throw SyntaxError("unexpected character '" + printable(c) +
                                  "' at offset " + std::to_string(start),
                              start);
        }
        out.push_back({Tok::End, text_.size()});
        return out;
    }

private:
    Token lex_var(std::size_t start) {
        ++pos_;  // past 'X'
        if (pos_ >= text_.size() || !is_digit(text_[pos_]))
            throw SyntaxError("expected digits after 'X' at offset " +
                                  std::to_string(start),
                              start);
        long long value = 0;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kIndexClamp) value = kIndexClamp;
            ++pos_;
        }
        return {Tok::Var, start, static_cast<int>(value)};
    }

    // Three-byte UTF-8 sequences for ∪ ∩ ∅.
    bool lex_unicode(unsigned char c, Tok& alias) {
        if (c != 0xE2 || pos_ + 2 >= text_.size()) return false;
        unsigned char b1 = static_cast<unsigned char>(text_[pos_ + 1]);
        unsigned char b2 = static_cast<unsigned char>(text_[pos_ + 2]);
        if (b1 == 0x88 && b2 == 0xAA) alias = Tok::Union;
        else if (b1 == 0x88 && b2 == 0xA9) alias = Tok::Inter;
        else if (b1 == 0x88 && b2 == 0x85) alias = Tok::Empty;
        else return false;
        pos_ += 3;
        return true;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    static std::string printable(unsigned char c) {
        if (c >= 0x20 && c < 0x7F) return std::string(1, static_cast<char>(c));
        static const char* hex = "0123456789abcdef";
        return std::string("\\x") + hex[c >> 4] + hex[c & 0xF];
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, Arity arity)
        : tokens_(std::move(tokens)), arity_(arity) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (peek().type != Tok::End)
            throw SyntaxError("expected end of input, found " +
                                  std::string(token_name(peek().type)) +
                                  " at offset " + std::to_string(peek().offset),
                              peek().offset);
        return e;
    }

private:
    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (peek().type == Tok::Union) {
            advance();
            e = Expr::union_of(std::move(e), parse_term());
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (peek().type == Tok::Inter) {
            advance();
            e = Expr::inter_of(std::move(e), parse_factor());
        }
        return e;
    }

    ExprPtr parse_factor() {
        if (peek().type == Tok::Bang) {
            advance();
            return Expr::compl_of(parse_factor());
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_atom();
        while (peek().type == Tok::Prime) {
            advance();
            e = Expr::compl_of(std::move(e));
        }
        return e;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        switch (t.type) {
            case Tok::Empty:
                advance();
                return Expr::empty();
            case Tok::Var: {
                if (t.index < 1 || t.index > arity_.value())
                    throw IndexOutOfRange(
                        "variable X" + std::to_string(t.index) + " at offset " +
                        std::to_string(t.offset) + " outside 1.." +
                        std::to_string(arity_.value()));
                advance();
                return Expr::var(t.index);
            }
            case Tok::LParen: {
                advance();
                ExprPtr e = parse_expr();
                if (peek().type != Tok::RParen)
                    throw SyntaxError("expected ')', found " +
                                          std::string(token_name(peek().type)) +
                                          " at offset " +
                                          std::to_string(peek().offset),
                                      peek().offset);
                advance();
                return e;
            }
            default:
                throw SyntaxError(
                    "expected '0', variable, '!' or '(', found " +
                        std::string(token_name(t.type)) + " at offset " +
                        std::to_string(t.offset),
                    t.offset);
        }
    }

    const Token& peek() const { return tokens_[pos_]; }
    void advance() { ++pos_; }

    std::vector<Token> tokens_;
    Arity arity_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text, Arity arity) {
    return Parser(Lexer(text).run(), arity).run();
}

}  // namespace iel
