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

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"

using namespace anser;
using anser::testing::Rng;
using anser::testing::close;

namespace {

/// Generates random trees in the parser's canonical (folded) form.
struct AstGen {
    explicit AstGen(unsigned seed) : rng(seed) {}

    ExprPtr literal() {
        // Nonnegative values: a sign prefix only parses at the head of an
        // expression, so embedded literals are kept unsigned.
        auto e = std::make_shared<Expr>();
        if (rng.flip()) {
            e->kind = Expr::Kind::rational;
            e->value = abs(rng.rational(9, 4));
        } else {
            e->kind = Expr::Kind::imaginary;
            e->value = abs(rng.nonzero_rational(9, 4));
        }
        return e;
    }

    ExprPtr leaf() {
        switch (rng.integer(0, 3)) {
            case 0: {
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::variable;
                return e;
            }
            case 1: {
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::ident;
                e->name = rng.flip() ? "f" : "gee2";
                return e;
            }
            default:
                return literal();
        }
    }

    bool is_literal(const ExprPtr& e) const {
        return e->kind == Expr::Kind::rational ||
               e->kind == Expr::Kind::imaginary;
    }

    ExprPtr gen(int depth) {
        if (depth <= 0) return leaf();
        switch (rng.integer(0, 5)) {
            case 0:
                return leaf();
            case 1: {  // binary
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::binary;
                e->op = "+-*/"[rng.integer(0, 3)];
                e->lhs = gen(depth - 1);
                e->rhs = gen(depth - 1);
                // Match the parser's reach: a negation spans a whole term
                // (never a factor), the right operand of +/- cannot start
                // with '-', and literal quotients fold into one literal.
                bool muldiv = e->op == '*' || e->op == '/';
                if (muldiv && e->lhs->kind == Expr::Kind::negate)
                    e->lhs = leaf_nonliteral();
                if (e->rhs->kind == Expr::Kind::negate ||
                    (e->op == '/' && is_literal(e->rhs) && is_literal(e->lhs)))
                    e->rhs = leaf_nonliteral();
                return e;
            }
            case 2: {  // power
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::power;
                e->lhs = gen(depth - 1);
                e->exponent = rng.rational(9, 4);
                e->has_branch = rng.flip();
                if (e->has_branch) e->branch = rng.integer(-3, 3);
                return e;
            }
            case 3: {  // negation of a non-literal
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::negate;
                e->lhs = leaf_nonliteral();
                return e;
            }
            default: {  // call, possibly with a list argument
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::call;
                e->name = rng.flip() ? "compose" : "inv";
                long argc = rng.integer(1, 3);
                for (long i = 0; i < argc; ++i) {
                    if (i == 1 && rng.flip()) {
                        auto list = std::make_shared<Expr>();
                        list->kind = Expr::Kind::list;
                        long items = rng.integer(0, 3);
                        for (long j = 0; j < items; ++j)
                            list->args.push_back(literal());
                        e->args.push_back(list);
                    } else {
                        e->args.push_back(gen(depth - 1));
                    }
                }
                e->has_branch = rng.flip();
                if (e->has_branch) e->branch = rng.integer(-3, 3);
                return e;
            }
        }
    }

    ExprPtr leaf_nonliteral() {
        auto e = std::make_shared<Expr>();
        if (rng.flip()) {
            e->kind = Expr::Kind::variable;
        } else {
            e->kind = Expr::Kind::ident;
            e->name = "f";
        }
        return e;
    }

    Rng rng;
};

SessionConfig window_cfg(long w) {
    SessionConfig cfg;
    cfg.window = w;
    return cfg;
}

Value eval_text(const std::string& text, const SessionConfig& cfg,
                Environment& env) {
    auto [name, expr] = parse_statement(text);
    REQUIRE(expr);
    Value v = eval(expr, cfg, env);
    if (name) env[*name] = v;
    return v;
}

Value eval_text(const std::string& text, const SessionConfig& cfg) {
    Environment env;
    return eval_text(text, cfg, env);
}

} // namespace

TEST_CASE("parsing shapes") {
    ExprPtr e = parse_expression("(1 + x)^(1/2; 0)");
    REQUIRE(e->kind == Expr::Kind::power);
    CHECK(e->exponent == Exponent(1, 2));
    CHECK(e->has_branch);
    CHECK(e->branch == 0);
    REQUIRE(e->lhs->kind == Expr::Kind::binary);
    CHECK(e->lhs->op == '+');

    ExprPtr c = parse_expression("compose(x - x^(2;0), x; 0)");
    REQUIRE(c->kind == Expr::Kind::call);
    CHECK(c->name == "compose");
    CHECK(c->args.size() == 2);
    CHECK(c->has_branch);

    try {
        parse_expression("1 + * x");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.column() == 5);
    }

    // Literal folding: quotients and signs of literals are one node.
    ExprPtr q = parse_expression("1/3");
    REQUIRE(q->kind == Expr::Kind::rational);
    CHECK(q->value == Exponent(1, 3));
    ExprPtr n = parse_expression("-4");
    REQUIRE(n->kind == Expr::Kind::rational);
    CHECK(n->value == -4);
    ExprPtr im = parse_expression("3i/2");
    REQUIRE(im->kind == Expr::Kind::imaginary);
    CHECK(im->value == Exponent(3, 2));
    ExprPtr dec = parse_expression("0.25");
    REQUIRE(dec->kind == Expr::Kind::rational);
    CHECK(dec->value == Exponent(1, 4));
}

TEST_CASE("pretty-print round trip") {
    AstGen gen(9001);
    for (int trial = 0; trial < 500; ++trial) {
        ExprPtr e = gen.gen(3);
        std::string text = pretty_print(e);
        ExprPtr back = parse_expression(text);
        INFO(text);
        CHECK(expr_equal(e, back));
    }
}

TEST_CASE("evaluation basics") {
    SessionConfig cfg5 = window_cfg(5);
    Value v = eval_text("inv(1 - x)", cfg5);
    const Series& s = std::get<Series>(v);
    for (int k = 0; k < 5; ++k)
        CHECK(close(s.coefficient_at(Exponent(k)), Complex(1, 0)));

    SessionConfig cfg = window_cfg(8);
    Value l = eval_text("lagrange(x - x*x, 4, 1)", cfg);
    CHECK(close(std::get<Complex>(l), Complex(5, 0)));

    SessionConfig natural = cfg;
    natural.exponents = ExponentMode::naturals;
    CHECK_THROWS_AS(eval_text("inv(x)", natural), NoExponentInverse);

    // Exact rational arithmetic all the way through.
    Value r = eval_text("(1/3 + 1/6) * 2", cfg);
    CHECK(std::get<Exponent>(r) == 1);

    Value p = eval_text("(-4)^(1/2; 0)", cfg);
    CHECK(close(std::get<Complex>(p), Complex(0, 2)));

    Value b = eval_text("eq((1+x)^(2), 1 + 2*x + x*x)", cfg);
    CHECK(std::get<bool>(b));

    Value d = eval_text("degree(0 * x)", cfg);
    CHECK(std::get<std::string>(d) == "+inf");

    Environment env;
    eval_text("f = 1 - x", cfg, env);
    Value g = eval_text("inv(f)", cfg, env);
    CHECK(close(std::get<Series>(g).coefficient_at(Exponent(3)), Complex(1, 0)));

    CHECK_THROWS_AS(eval_text("nope(1)", cfg), Error);
    CHECK_THROWS_AS(eval_text("undefined_name + 1", cfg), Error);
}

TEST_CASE("evaluation reaches every module") {
    SessionConfig cfg = window_cfg(6);
    Environment env;

    CHECK(std::get<std::string>(eval_text("polar(2i)", cfg, env)) ==
          "(2, 1.5708)");
    CHECK(std::get<Exponent>(eval_text("branch_mul(-1, -1, 0, 0)", cfg, env)) ==
          1);
    CHECK(std::get<Exponent>(eval_text("branch_iter(-1, 3, 0)", cfg, env)) == 1);
    CHECK(std::get<Exponent>(eval_text("falling(1/2, 2)", cfg, env)) ==
          Exponent(-1, 4));
    CHECK(std::get<Exponent>(eval_text("mbinom(1/2, [1, 1])", cfg, env)) ==
          Exponent(-1, 8));

    eval_text("g = 1 + x", cfg, env);
    CHECK(std::get<bool>(
        eval_text("eq(pow_oracle(g, 1/2; 0), g^(1/2; 0))", cfg, env)));
    CHECK(std::get<Exponent>(eval_text("pbranch_mul(g, g, 0, 0)", cfg, env)) ==
          0);
    CHECK(std::get<Exponent>(eval_text("pbranch_iter(g, 3, 0)", cfg, env)) == 0);
    CHECK(std::get<Complex>(eval_text("argof(g)", cfg, env)) == Complex(0, 0));
    CHECK(std::get<Exponent>(eval_text("window(g)", cfg, env)) == 6);

    eval_text("d = dual(g)", cfg, env);
    CHECK(std::get<Series>(env.at("d")).orientation() == Orientation::artinian);

    CHECK(std::get<bool>(eval_text("eq(D(x*x), 2*x)", cfg, env)));
    CHECK(std::get<bool>(
        eval_text("eq(compose(g, x*x; 0), 1 + x*x)", cfg, env)));
    CHECK(std::get<bool>(
        eval_text("eq(compose(compinv(x - x*x; 0), x - x*x; 0), x)", cfg, env)));
    CHECK(close(std::get<Complex>(
                    eval_text("assoc_defect(x, x^(1/4), x^(1/2); 0)", cfg, env)),
                Complex(1, 0)));
    CHECK(std::get<bool>(eval_text("eq(truncate(g, 1), 1 + 0*x)", cfg, env)));

    CHECK(std::get<bool>(
        eval_text("eq(msym([1], 3) * msym([1], 3), msym([2], 3) + 2 * msym([1, 1], 3))",
                  cfg, env)));
    CHECK(std::get<bool>(
        eval_text("eq(omega(psym(2, 3)), -1 * psym(2, 3))", cfg, env)));
    CHECK(std::get<bool>(eval_text("tri_e([1, 1], 3)", cfg, env)));
    CHECK(std::get<bool>(
        eval_text("eq(ebasis([1, 1], 3; 0), esym(2, 3))", cfg, env)));
    CHECK(std::get<Complex>(eval_text("coeff(hsym(2, 3), [1, 1])", cfg, env)) ==
          Complex(1, 0));
    CHECK(std::get<Complex>(eval_text("bdefect_e([1, 1], 3; 0)", cfg, env)) ==
          Complex(0, 0));

    CHECK(std::get<Exponent>(eval_text("isint(embed(7, 10))", cfg, env)) == 7);
    CHECK(std::get<std::string>(eval_text("isint(pfsum(24))", cfg, env)) ==
          "none");
    CHECK(std::get<bool>(
        eval_text("eq(embed(2, 8) + embed(3, 8), embed(5, 8))", cfg, env)));
    CHECK(std::get<bool>(
        eval_text("eq(embed(2, 8) * embed(3, 8), embed(6, 8))", cfg, env)));
}

TEST_CASE("series JSON round trip") {
    Rng rng(9002);
    for (int trial = 0; trial < 60; ++trial) {
        Rng::SeriesSpec spec;
        spec.orientation =
            rng.flip() ? Orientation::noetherian : Orientation::artinian;
        spec.window = spec.orientation == Orientation::noetherian
                          ? rng.rational(10, 3)
                          : -rng.rational(10, 3);
        if (spec.orientation == Orientation::noetherian && spec.window < 1)
            spec.window = 1;
        if (spec.orientation == Orientation::artinian && spec.window > -1)
            spec.window = -1;
        spec.nonzero = false;
        Series f = rng.series(spec);
        Json j = series_to_json(f);
        Series back = series_from_json(Json::parse(j.dump()));
        CHECK(back.orientation() == f.orientation());
        CHECK(back.window() == f.window());
        REQUIRE(back.terms().size() == f.terms().size());
        auto it = back.terms().begin();
        for (const auto& [e, c] : f.terms()) {
            CHECK(it->first == e);
            CHECK(it->second.real() == c.real());
            CHECK(it->second.imag() == c.imag());
            ++it;
        }
    }

    SymSeries s = complete(2, 3, Exponent(5));
    SymSeries back = sym_from_json(Json::parse(sym_to_json(s).dump()));
    CHECK(sym_approx_eq(back, s, 0.0));
}

TEST_CASE("batch execution") {
    SessionConfig cfg = window_cfg(6);
    std::string script =
        "# geometric series\n"
        "f = 1 - x\n"
        "g = inv(f)\n"
        "eq(f * g, 1 + 0*x)\n"
        "\n"
        "lagrange(x - x*x, 4, 1)\n";

    std::istringstream in1(script), in2(script);
    std::ostringstream out1, out2, err;
    CHECK(run_batch(in1, out1, err, cfg, true) == 0);
    CHECK(run_batch(in2, out2, err, cfg, true) == 0);
    CHECK(out1.str() == out2.str());
    CHECK(out1.str().find("\"line\":3") != std::string::npos);

    std::istringstream bad("a = 1\nb = inv(0 * x)\n");
    std::ostringstream out3, err3;
    CHECK(run_batch(bad, out3, err3, cfg, false) != 0);
    CHECK(err3.str().find("line 2") != std::string::npos);
}
