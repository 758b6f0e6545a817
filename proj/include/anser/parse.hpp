/*
   Copyright 2026 The anser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ANSER_PARSE_HPP
#define ANSER_PARSE_HPP

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anser/errors.hpp"
#include "anser/rational.hpp"
#include "anser/scalar.hpp"

namespace anser {

// Grammar:
//   stmt   := ident '=' expr | expr
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' '(' rational (';' integer)? ')']
//   atom   := rational | imaginary | 'x' | ident | call | list | '(' expr ')'
//   call   := ident '(' expr (',' expr)* (';' integer)? ')'
//   list   := '[' expr (',' expr)* ']'
// Rational literals are exact: decimals are read digit-for-digit (0.1 ->
// 1/10) and quotients of literals fold into one rational at parse time.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind {
        rational,   // value
        imaginary,  // value * i
        variable,   // x
        ident,      // named binding
        negate,     // -operand (non-literal operand)
        binary,     // op in {+,-,*,/}
        power,      // base ^ (exponent; branch)
        call,       // name(args; branch)
        list        // [items]
    };

    Kind kind;
    int line = 1;
    int column = 1;

    Exponent value;  // rational / imaginary

    char op = 0;
    ExprPtr lhs, rhs;  // binary; negate uses lhs

    Exponent exponent;  // power
    BranchIndex branch = 0;
    bool has_branch = false;  // power / call

    std::string name;  // ident / call
    std::vector<ExprPtr> args;  // call / list
};

namespace detail {

struct Token {
    enum class Type { number, imaginary, ident, op, end };
    Type type = Type::end;
    std::string text;  // number digits (may contain '.'), ident name
    char symbol = 0;   // for op
    int column = 1;
};

class Lexer {
public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) {
        tokenize();
    }

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    Token next() {
        const Token& t = peek();
        if (t.type != Token::Type::end) ++pos_;
        return t;
    }

    int line() const { return line_; }

private:
    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            int col = static_cast<int>(i) + 1;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                bool seen_dot = false;
                while (j < text_.size() &&
                       (std::isdigit(static_cast<unsigned char>(text_[j])) ||
                        (text_[j] == '.' && !seen_dot))) {
                    if (text_[j] == '.') seen_dot = true;
                    ++j;
                }
                std::string digits = text_.substr(i, j - i);
                if (j < text_.size() && text_[j] == 'i' &&
                    (j + 1 >= text_.size() || !is_word(text_[j + 1]))) {
                    tokens_.push_back({Token::Type::imaginary, digits, 0, col});
                    i = j + 1;
                } else if (j < text_.size() && is_word(text_[j])) {
                    throw ParseError("malformed number literal", line_, col);
                } else {
                    tokens_.push_back({Token::Type::number, digits, 0, col});
                    i = j;
                }
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < text_.size() && is_word(text_[j])) ++j;
                tokens_.push_back(
                    {Token::Type::ident, text_.substr(i, j - i), 0, col});
                i = j;
                continue;
            }
            if (std::string("+-*/^()[],;=").find(c) != std::string::npos) {
                tokens_.push_back({Token::Type::op, std::string(1, c), c, col});
                ++i;
                continue;
            }
            throw ParseError(std::string("unexpected character '") + c + "'",
                             line_, col);
        }
        tokens_.push_back({Token::Type::end, "", 0,
                           static_cast<int>(text_.size()) + 1});
    }

    static bool is_word(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string text_;
    int line_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(const std::string& text, int line) : lex_(text, line) {}

    ExprPtr expression() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

    /// Either "name = expr" or a bare expression; empty on blank input.
    std::pair<std::optional<std::string>, ExprPtr> statement() {
        if (lex_.peek().type == Token::Type::end) return {std::nullopt, nullptr};
        if (lex_.peek().type == Token::Type::ident &&
            lex_.peek(1).symbol == '=') {
            std::string name = lex_.next().text;
            if (name == "x" || name == "i")
                throw ParseError("'" + name + "' is reserved", lex_.line(),
                                 lex_.peek().column);
            lex_.next();  // '='
            ExprPtr e = parse_expr();
            expect_end();
            return {name, e};
        }
        ExprPtr e = parse_expr();
        expect_end();
        return {std::nullopt, e};
    }

private:
    void expect_end() {
        if (lex_.peek().type != Token::Type::end)
            throw ParseError("unexpected trailing input '" + lex_.peek().text +
                                 lex_.peek().symbol + "'",
                             lex_.line(), lex_.peek().column);
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, lex_.line(), lex_.peek().column);
    }

    bool match(char symbol) {
        if (lex_.peek().symbol == symbol) {
            lex_.next();
            return true;
        }
        return false;
    }

    void expect(char symbol) {
        if (!match(symbol))
            fail(std::string("expected '") + symbol + "'");
    }

    std::shared_ptr<Expr> node(Expr::Kind kind, int column) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = lex_.line();
        e->column = column;
        return e;
    }

    ExprPtr parse_expr() {
        int col = lex_.peek().column;
        ExprPtr left;
        if (match('-')) {
            left = negated(parse_term(), col);
        } else {
            left = parse_term();
        }
        while (lex_.peek().symbol == '+' || lex_.peek().symbol == '-') {
            char op = lex_.next().symbol;
            ExprPtr right = parse_term();
            auto e = node(Expr::Kind::binary, col);
            e->op = op;
            e->lhs = left;
            e->rhs = right;
            left = e;
        }
        return left;
    }

    ExprPtr parse_term() {
        int col = lex_.peek().column;
        ExprPtr left = parse_factor();
        while (lex_.peek().symbol == '*' || lex_.peek().symbol == '/') {
            char op = lex_.next().symbol;
            ExprPtr right = parse_factor();
            left = op == '/' ? folded_div(left, right, col)
                             : folded_bin('*', left, right, col);
        }
        return left;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (lex_.peek().symbol != '^') return base;
        int col = lex_.peek().column;
        lex_.next();
        expect('(');
        auto e = node(Expr::Kind::power, col);
        e->lhs = base;
        e->exponent = parse_rational_literal();
        if (match(';')) {
            e->branch = parse_integer_literal();
            e->has_branch = true;
        }
        expect(')');
        return e;
    }

    ExprPtr parse_atom() {
        const Token& t = lex_.peek();
        int col = t.column;
        switch (t.type) {
            case Token::Type::number: {
                auto e = node(Expr::Kind::rational, col);
                e->value = exp_from_string(lex_.next().text);
                return e;
            }
            case Token::Type::imaginary: {
                auto e = node(Expr::Kind::imaginary, col);
                e->value = exp_from_string(lex_.next().text);
                return e;
            }
            case Token::Type::ident: {
                std::string name = lex_.next().text;
                if (name == "x") return node(Expr::Kind::variable, col);
                if (name == "i") {
                    auto e = node(Expr::Kind::imaginary, col);
                    e->value = 1;
                    return e;
                }
                if (lex_.peek().symbol == '(') return parse_call(name, col);
                auto e = node(Expr::Kind::ident, col);
                e->name = name;
                return e;
            }
            case Token::Type::op:
                if (t.symbol == '(') {
                    lex_.next();
                    ExprPtr inner = parse_expr();
                    expect(')');
                    return inner;
                }
                if (t.symbol == '[') return parse_list(col);
                break;
            default:
                break;
        }
        fail("expected a value");
    }

    ExprPtr parse_call(const std::string& name, int col) {
        expect('(');
        auto e = node(Expr::Kind::call, col);
        e->name = name;
        if (lex_.peek().symbol != ')') {
            e->args.push_back(parse_expr());
            while (match(',')) e->args.push_back(parse_expr());
            if (match(';')) {
                e->branch = parse_integer_literal();
                e->has_branch = true;
            }
        }
        expect(')');
        return e;
    }

    ExprPtr parse_list(int col) {
        expect('[');
        auto e = node(Expr::Kind::list, col);
        if (lex_.peek().symbol != ']') {
            e->args.push_back(parse_expr());
            while (match(',')) e->args.push_back(parse_expr());
        }
        expect(']');
        return e;
    }

    /// Signed rational in literal position: "3", "-1/2", "0.25".
    Exponent parse_rational_literal() {
        bool negative = match('-');
        if (lex_.peek().type != Token::Type::number) fail("expected a rational");
        Exponent value = exp_from_string(lex_.next().text);
        if (match('/')) {
            if (lex_.peek().type != Token::Type::number)
                fail("expected a denominator");
            Exponent den = exp_from_string(lex_.next().text);
            if (den == 0) fail("zero denominator");
            value /= den;
        }
        return negative ? -value : value;
    }

    BranchIndex parse_integer_literal() {
        bool negative = match('-');
        if (lex_.peek().type != Token::Type::number) fail("expected an integer");
        Exponent value = exp_from_string(lex_.next().text);
        if (!exp_is_integer(value)) fail("branch index must be an integer");
        long v = exp_to_long(value);
        return negative ? -v : v;
    }

    ExprPtr negated(ExprPtr operand, int col) {
        // Fold negation of literals so that "-4" is one rational.
        if (operand->kind == Expr::Kind::rational ||
            operand->kind == Expr::Kind::imaginary) {
            auto e = node(operand->kind, col);
            e->value = -operand->value;
            return e;
        }
        auto e = node(Expr::Kind::negate, col);
        e->lhs = operand;
        return e;
    }

    ExprPtr folded_bin(char op, ExprPtr l, ExprPtr r, int col) {
        auto e = node(Expr::Kind::binary, col);
        e->op = op;
        e->lhs = l;
        e->rhs = r;
        return e;
    }

    /// Quotients of literals fold to one exact literal, so "1/3" is the
    /// rational 1/3 rather than a division node.
    ExprPtr folded_div(ExprPtr l, ExprPtr r, int col) {
        if (r->kind == Expr::Kind::rational && r->value != 0 &&
            (l->kind == Expr::Kind::rational ||
             l->kind == Expr::Kind::imaginary)) {
            auto e = node(l->kind, col);
            e->value = l->value / r->value;
            return e;
        }
        return folded_bin('/', l, r, col);
    }

    Lexer lex_;
};

} // namespace detail

inline ExprPtr parse_expression(const std::string& text, int line = 1) {
    return detail::Parser(text, line).expression();
}

/// Parses one statement; the expression is null for blank input.
inline std::pair<std::optional<std::string>, ExprPtr> parse_statement(
    const std::string& text, int line = 1) {
    std::string body = text;
    auto hash = body.find('#');
    if (hash != std::string::npos) body.erase(hash);
    return detail::Parser(body, line).statement();
}

inline std::string pretty_print(const ExprPtr& e);

namespace detail {

inline std::string print_rational(const Exponent& v) {
    return exp_to_string(v);
}

inline std::string print_imaginary(const Exponent& v) {
    BigInt num = numerator(v);
    BigInt den = denominator(v);
    std::string s;
    if (num == 1)
        s = "i";
    else if (num == -1)
        s = "-i";
    else
        s = num.str() + "i";
    if (den != 1) s += "/" + den.str();
    return s;
}

inline std::string print_power_base(const ExprPtr& base) {
    bool needs_parens = base->kind == Expr::Kind::binary ||
                        base->kind == Expr::Kind::negate ||
                        base->kind == Expr::Kind::power ||
                        ((base->kind == Expr::Kind::rational ||
                          base->kind == Expr::Kind::imaginary) &&
                         (base->value < 0 || !exp_is_integer(base->value)));
    if (needs_parens) return "(" + pretty_print(base) + ")";
    return pretty_print(base);
}

} // namespace detail

/// Canonical rendering; parse(pretty_print(e)) reproduces e for every tree
/// the parser can emit.
inline std::string pretty_print(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::rational:
            return detail::print_rational(e->value);
        case Expr::Kind::imaginary:
            return detail::print_imaginary(e->value);
        case Expr::Kind::variable:
            return "x";
        case Expr::Kind::ident:
            return e->name;
        case Expr::Kind::negate:
            return "-(" + pretty_print(e->lhs) + ")";
        case Expr::Kind::binary: {
            std::string rhs = pretty_print(e->rhs);
            // A denominator-carrying literal after '*' or '/' would
            // re-associate ("x * 1/2" reads as (x*1)/2); parenthesize it.
            bool quotient_literal = (e->rhs->kind == Expr::Kind::rational ||
                                     e->rhs->kind == Expr::Kind::imaginary) &&
                                    denominator(e->rhs->value) != 1;
            if ((e->op == '*' || e->op == '/') && quotient_literal)
                rhs = "(" + rhs + ")";
            return "(" + pretty_print(e->lhs) + " " + e->op + " " + rhs + ")";
        }
        case Expr::Kind::power: {
            std::string s = detail::print_power_base(e->lhs) + "^(" +
                            exp_to_string(e->exponent);
            if (e->has_branch) s += "; " + std::to_string(e->branch);
            return s + ")";
        }
        case Expr::Kind::call: {
            std::string s = e->name + "(";
            for (std::size_t i = 0; i < e->args.size(); ++i) {
                if (i) s += ", ";
                s += pretty_print(e->args[i]);
            }
            if (e->has_branch) s += "; " + std::to_string(e->branch);
            return s + ")";
        }
        case Expr::Kind::list: {
            std::string s = "[";
            for (std::size_t i = 0; i < e->args.size(); ++i) {
                if (i) s += ", ";
                s += pretty_print(e->args[i]);
            }
            return s + "]";
        }
    }
    throw Error("pretty_print: unknown node");
}

inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Expr::Kind::rational:
        case Expr::Kind::imaginary:
            return a->value == b->value;
        case Expr::Kind::variable:
            return true;
        case Expr::Kind::ident:
            return a->name == b->name;
        case Expr::Kind::negate:
            return expr_equal(a->lhs, b->lhs);
        case Expr::Kind::binary:
            return a->op == b->op && expr_equal(a->lhs, b->lhs) &&
                   expr_equal(a->rhs, b->rhs);
        case Expr::Kind::power:
            return a->exponent == b->exponent &&
                   a->has_branch == b->has_branch &&
                   (!a->has_branch || a->branch == b->branch) &&
                   expr_equal(a->lhs, b->lhs);
        case Expr::Kind::call:
        case Expr::Kind::list: {
            if (a->kind == Expr::Kind::call &&
                (a->name != b->name || a->has_branch != b->has_branch ||
                 (a->has_branch && a->branch != b->branch)))
                return false;
            if (a->args.size() != b->args.size()) return false;
            for (std::size_t i = 0; i < a->args.size(); ++i)
                if (!expr_equal(a->args[i], b->args[i])) return false;
            return true;
        }
    }
    return false;
}

} // namespace anser

#endif
