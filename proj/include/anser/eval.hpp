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

#ifndef ANSER_EVAL_HPP
#define ANSER_EVAL_HPP

#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "anser/calculus.hpp"
#include "anser/compose.hpp"
#include "anser/parse.hpp"
#include "anser/power.hpp"
#include "anser/profinite.hpp"
#include "anser/serialize.hpp"
#include "anser/series.hpp"
#include "anser/symmetric.hpp"

namespace anser {

/// Anything a statement can evaluate to. Strings carry sentinel outputs
/// such as the degree of the zero series.
using Value =
    std::variant<Exponent, Complex, Series, SymSeries, Pseudointeger, bool,
                 std::string>;

struct SessionConfig {
    Orientation orientation = Orientation::noetherian;
    Exponent window = 12;
    double tolerance = 1e-9;
    ExponentMode exponents = ExponentMode::rationals;
};

using Environment = std::map<std::string, Value>;

namespace detail {

inline const char* value_kind(const Value& v) {
    switch (v.index()) {
        case 0: return "rational";
        case 1: return "complex";
        case 2: return "series";
        case 3: return "symmetric series";
        case 4: return "pseudointeger";
        case 5: return "boolean";
        default: return "string";
    }
}

[[noreturn]] inline void bad_operand(const std::string& what, const Value& v) {
    throw Error(what + ": unsupported operand of kind " + value_kind(v));
}

inline Complex as_complex(const Value& v, const std::string& what) {
    if (const auto* q = std::get_if<Exponent>(&v))
        return Complex(exp_to_double(*q), 0.0);
    if (const auto* z = std::get_if<Complex>(&v)) return *z;
    bad_operand(what, v);
}

inline Exponent as_rational(const Value& v, const std::string& what) {
    if (const auto* q = std::get_if<Exponent>(&v)) return *q;
    throw Error(what + ": expected an exact rational");
}

inline long as_integer(const Value& v, const std::string& what) {
    return exp_to_long(as_rational(v, what));
}

inline const Series& as_series(const Value& v, const std::string& what) {
    if (const auto* s = std::get_if<Series>(&v)) return *s;
    throw Error(what + ": expected a series");
}

inline const SymSeries& as_sym(const Value& v, const std::string& what) {
    if (const auto* s = std::get_if<SymSeries>(&v)) return *s;
    throw Error(what + ": expected a symmetric series");
}

inline const Pseudointeger& as_pseudo(const Value& v, const std::string& what) {
    if (const auto* p = std::get_if<Pseudointeger>(&v)) return *p;
    throw Error(what + ": expected a pseudointeger");
}

inline bool is_scalar(const Value& v) {
    return std::holds_alternative<Exponent>(v) ||
           std::holds_alternative<Complex>(v);
}

inline Series lift_scalar(const Value& v, const Series& model) {
    return Series::constant(model.orientation(), model.window(),
                            as_complex(v, "scalar"));
}

inline SymSeries lift_scalar_sym(const Value& v, const SymSeries& model) {
    return SymSeries::constant(model.nvars(), model.cutoff(),
                               as_complex(v, "scalar"));
}

inline Pseudointeger lift_scalar_pi(const Value& v, const Pseudointeger& model) {
    Exponent q = as_rational(v, "pseudointeger arithmetic");
    if (!exp_is_integer(q))
        throw Error("pseudointeger arithmetic: integer scalar required");
    return embed(numerator(q), model.bound());
}

} // namespace detail

inline Value eval(const ExprPtr& e, const SessionConfig& cfg, Environment& env);

namespace detail {

inline void check_monoid(const SessionConfig& cfg, const Exponent& e,
                         const std::string& what) {
    if (cfg.exponents == ExponentMode::naturals &&
        (e < 0 || !exp_is_integer(e)))
        throw Error(what + ": exponent " + exp_to_string(e) +
                    " lies outside the naturals restriction");
}

inline Value eval_binary(char op, const Value& a, const Value& b,
                         const SessionConfig& cfg) {
    const std::string what(1, op);
    // Pseudointeger ring, with integers embedded on demand.
    if (std::holds_alternative<Pseudointeger>(a) ||
        std::holds_alternative<Pseudointeger>(b)) {
        Pseudointeger x = std::holds_alternative<Pseudointeger>(a)
                              ? std::get<Pseudointeger>(a)
                              : lift_scalar_pi(a, std::get<Pseudointeger>(b));
        Pseudointeger y = std::holds_alternative<Pseudointeger>(b)
                              ? std::get<Pseudointeger>(b)
                              : lift_scalar_pi(b, std::get<Pseudointeger>(a));
        switch (op) {
            case '+': return pi_add(x, y);
            case '-': return pi_add(x, pi_neg(y));
            case '*': return pi_mul(x, y);
            default: throw Error("pseudointegers do not divide");
        }
    }
    // Symmetric series algebra.
    if (std::holds_alternative<SymSeries>(a) ||
        std::holds_alternative<SymSeries>(b)) {
        if (is_scalar(a) && op == '*')
            return sym_scale(as_complex(a, what), std::get<SymSeries>(b));
        if (is_scalar(b) && (op == '*' || op == '/')) {
            Complex z = as_complex(b, what);
            if (op == '/') z = Complex(1.0, 0.0) / z;
            return sym_scale(z, std::get<SymSeries>(a));
        }
        const SymSeries& model = std::holds_alternative<SymSeries>(a)
                                     ? std::get<SymSeries>(a)
                                     : std::get<SymSeries>(b);
        SymSeries x = std::holds_alternative<SymSeries>(a)
                          ? std::get<SymSeries>(a)
                          : lift_scalar_sym(a, model);
        SymSeries y = std::holds_alternative<SymSeries>(b)
                          ? std::get<SymSeries>(b)
                          : lift_scalar_sym(b, model);
        switch (op) {
            case '+': return sym_add(x, y);
            case '-': return sym_sub(x, y);
            case '*': return sym_mul(x, y);
            default: return sym_mul(x, sym_invert(y));
        }
    }
    // Series algebra, scalars lifted to constants.
    if (std::holds_alternative<Series>(a) || std::holds_alternative<Series>(b)) {
        if (is_scalar(a) && op == '*')
            return scalar_mul(as_complex(a, what), std::get<Series>(b));
        if (is_scalar(b) && (op == '*' || op == '/')) {
            Complex z = as_complex(b, what);
            if (op == '/') z = Complex(1.0, 0.0) / z;
            return scalar_mul(z, std::get<Series>(a));
        }
        const Series& model = std::holds_alternative<Series>(a)
                                  ? std::get<Series>(a)
                                  : std::get<Series>(b);
        Series x = std::holds_alternative<Series>(a) ? std::get<Series>(a)
                                                     : lift_scalar(a, model);
        Series y = std::holds_alternative<Series>(b) ? std::get<Series>(b)
                                                     : lift_scalar(b, model);
        switch (op) {
            case '+': return add(x, y);
            case '-': return sub(x, y);
            case '*': return mul(x, y);
            default: return mul(x, invert(y, cfg.exponents));
        }
    }
    // Exact rational arithmetic where possible.
    if (std::holds_alternative<Exponent>(a) &&
        std::holds_alternative<Exponent>(b)) {
        const Exponent& x = std::get<Exponent>(a);
        const Exponent& y = std::get<Exponent>(b);
        switch (op) {
            case '+': return x + y;
            case '-': return x - y;
            case '*': return x * y;
            default:
                if (y == 0) throw DivisionByZero("division by zero");
                return x / y;
        }
    }
    if (is_scalar(a) && is_scalar(b)) {
        Complex x = as_complex(a, what), y = as_complex(b, what);
        switch (op) {
            case '+': return x + y;
            case '-': return x - y;
            case '*': return x * y;
            default:
                if (coeff_is_zero(y, config::tolerance()))
                    throw DivisionByZero("division by zero");
                return x / y;
        }
    }
    bad_operand(what, a);
}

inline Value eval_power(const Value& base, const Exponent& t, BranchIndex n,
                        const SessionConfig& cfg) {
    check_monoid(cfg, t, "power");
    if (const auto* q = std::get_if<Exponent>(&base)) {
        if (exp_is_integer(t)) {
            long k = exp_to_long(t);
            if (*q == 0 && k <= 0)
                throw UndefinedPower("0 raised to a nonpositive power");
            Exponent acc = 1;
            Exponent b = k < 0 ? Exponent(1) / *q : *q;
            for (long i = 0; i < std::abs(k); ++i) acc *= b;
            return acc;
        }
        return cpow(Complex(exp_to_double(*q), 0.0), t, n);
    }
    if (const auto* z = std::get_if<Complex>(&base)) return cpow(*z, t, n);
    if (const auto* f = std::get_if<Series>(&base)) {
        if (exp_is_integer(t) && abs(numerator(t)) <= 8) {
            long k = exp_to_long(t);
            if (k == 0) {
                if (f->is_zero())
                    throw UndefinedPower("0 raised to the power 0");
                return Series::constant(f->orientation(), f->window(),
                                        Complex(1.0, 0.0));
            }
            Series b = k < 0 ? invert(*f, cfg.exponents) : *f;
            Series acc = b;
            for (long i = 1; i < std::abs(k); ++i) acc = mul(acc, b);
            return acc;
        }
        return pow(*f, t, n);
    }
    if (const auto* s = std::get_if<SymSeries>(&base)) {
        if (!exp_is_integer(t))
            throw Error("symmetric series take integer powers here; use the "
                        "basis functions for real exponents");
        long k = exp_to_long(t);
        SymSeries b = k < 0 ? sym_invert(*s) : *s;
        SymSeries acc = SymSeries::constant(s->nvars(), s->cutoff(),
                                            Complex(1.0, 0.0));
        for (long i = 0; i < std::abs(k); ++i) acc = sym_mul(acc, b);
        return acc;
    }
    if (const auto* p = std::get_if<Pseudointeger>(&base)) {
        if (!exp_is_integer(t) || t < 0)
            throw Error("pseudointegers take nonnegative integer powers");
        long k = exp_to_long(t);
        Pseudointeger acc = embed(BigInt(1), p->bound());
        for (long i = 0; i < k; ++i) acc = pi_mul(acc, *p);
        return acc;
    }
    bad_operand("power", base);
}

inline RealPartition as_partition(const ExprPtr& arg, const SessionConfig& cfg,
                                  Environment& env) {
    if (arg->kind != Expr::Kind::list)
        throw Error("expected a partition list such as [3/2, 1]");
    std::vector<Exponent> parts;
    for (const auto& item : arg->args)
        parts.push_back(as_rational(eval(item, cfg, env), "partition part"));
    return RealPartition(std::move(parts));
}

inline Multiset as_multiset(const ExprPtr& arg, const SessionConfig& cfg,
                            Environment& env) {
    if (arg->kind != Expr::Kind::list)
        throw Error("expected a multiset list such as [1, 1, 2]");
    Multiset m;
    for (const auto& item : arg->args)
        m.insert(as_rational(eval(item, cfg, env), "multiset entry"));
    return m;
}

inline SymFamily family_from_name(char c) {
    switch (c) {
        case 'e': return SymFamily::elementary;
        case 'h': return SymFamily::complete;
        default: return SymFamily::powersum;
    }
}

inline bool values_close(const Value& a, const Value& b, double tol) {
    if (std::holds_alternative<Series>(a) && std::holds_alternative<Series>(b))
        return approx_eq(std::get<Series>(a), std::get<Series>(b), tol);
    if (std::holds_alternative<SymSeries>(a) &&
        std::holds_alternative<SymSeries>(b))
        return sym_approx_eq(std::get<SymSeries>(a), std::get<SymSeries>(b), tol);
    if (std::holds_alternative<Exponent>(a) &&
        std::holds_alternative<Exponent>(b))
        return std::get<Exponent>(a) == std::get<Exponent>(b);
    if (is_scalar(a) && is_scalar(b))
        return std::abs(as_complex(a, "eq") - as_complex(b, "eq")) <= tol;
    if (std::holds_alternative<Pseudointeger>(a) &&
        std::holds_alternative<Pseudointeger>(b))
        return std::get<Pseudointeger>(a) == std::get<Pseudointeger>(b);
    return false;
}

inline Value eval_call(const Expr& e, const SessionConfig& cfg,
                       Environment& env) {
    const std::string& name = e.name;
    BranchIndex branch = e.has_branch ? e.branch : 0;
    auto argc = e.args.size();
    auto arg = [&](std::size_t i) { return eval(e.args[i], cfg, env); };
    auto need = [&](std::size_t n) {
        if (argc != n)
            throw Error(name + ": expected " + std::to_string(n) +
                        " argument(s), got " + std::to_string(argc));
    };

    if (name == "inv") {
        need(1);
        Value v = arg(0);
        if (const auto* q = std::get_if<Exponent>(&v)) {
            if (*q == 0) throw DivisionByZero("inv: zero");
            return Exponent(1) / *q;
        }
        if (const auto* z = std::get_if<Complex>(&v)) return coeff_inv(*z);
        if (const auto* f = std::get_if<Series>(&v))
            return invert(*f, cfg.exponents);
        if (const auto* s = std::get_if<SymSeries>(&v)) return sym_invert(*s);
        bad_operand("inv", v);
    }
    if (name == "D") {
        need(1);
        return derivative(as_series(arg(0), name));
    }
    if (name == "dual") {
        need(1);
        return dualize(as_series(arg(0), name));
    }
    if (name == "degree") {
        need(1);
        const Series& f = as_series(arg(0), name);
        auto d = f.degree();
        if (d) return *d;
        return std::string(f.orientation() == Orientation::noetherian ? "+inf"
                                                                      : "-inf");
    }
    if (name == "window") {
        need(1);
        return as_series(arg(0), name).window();
    }
    if (name == "coeff") {
        need(2);
        Value v = arg(0);
        if (const auto* s = std::get_if<SymSeries>(&v))
            return s->coefficient_at(as_partition(e.args[1], cfg, env));
        return as_series(v, name).coefficient_at(
            as_rational(arg(1), "coeff exponent"));
    }
    if (name == "truncate") {
        need(2);
        return truncate(as_series(arg(0), name),
                        as_rational(arg(1), "truncate bound"));
    }
    if (name == "polar") {
        need(1);
        Polar p = to_polar(as_complex(arg(0), name));
        std::ostringstream os;
        os << "(" << p.modulus << ", " << p.argument << ")";
        return os.str();
    }
    if (name == "argof") {
        need(1);
        Value v = arg(0);
        if (const auto* f = std::get_if<Series>(&v))
            return Complex(arg_of(*f), 0.0);
        return Complex(to_polar(as_complex(v, name)).argument, 0.0);
    }
    if (name == "branch_mul") {
        need(4);
        return Exponent(product_branch(as_complex(arg(0), name),
                                       as_complex(arg(1), name),
                                       as_integer(arg(2), name),
                                       as_integer(arg(3), name)));
    }
    if (name == "branch_iter") {
        need(3);
        return Exponent(iterate_branch(as_complex(arg(0), name),
                                       as_rational(arg(1), name),
                                       as_integer(arg(2), name)));
    }
    if (name == "pbranch_mul") {
        need(4);
        return Exponent(pow_product_branch(as_series(arg(0), name),
                                           as_series(arg(1), name),
                                           as_integer(arg(2), name),
                                           as_integer(arg(3), name)));
    }
    if (name == "pbranch_iter") {
        need(3);
        return Exponent(pow_iterate_branch(as_series(arg(0), name),
                                           as_rational(arg(1), name),
                                           as_integer(arg(2), name)));
    }
    if (name == "falling") {
        need(2);
        long m = as_integer(arg(1), name);
        if (m < 0) throw Error("falling: count must be nonnegative");
        Value v = arg(0);
        if (const auto* q = std::get_if<Exponent>(&v))
            return falling_factorial(*q, static_cast<unsigned>(m));
        return falling_factorial(as_complex(v, name), static_cast<unsigned>(m));
    }
    if (name == "mbinom") {
        need(2);
        return multiset_binomial_exact(as_rational(arg(0), name),
                                       as_multiset(e.args[1], cfg, env));
    }
    if (name == "pow_oracle") {
        need(2);
        return pow_multiset_oracle(as_series(arg(0), name),
                                   as_rational(arg(1), name), branch);
    }
    if (name == "compose") {
        need(2);
        return compose(as_series(arg(0), name), as_series(arg(1), name), branch);
    }
    if (name == "compinv") {
        need(1);
        return comp_inverse(as_series(arg(0), name), branch);
    }
    if (name == "lagrange") {
        need(3);
        return lagrange_coefficient(as_series(arg(0), name),
                                    as_rational(arg(1), name),
                                    as_rational(arg(2), name));
    }
    if (name == "assoc_defect") {
        need(3);
        return associativity_defect(as_series(arg(0), name),
                                    as_series(arg(1), name),
                                    as_series(arg(2), name), branch);
    }
    if (name == "eq") {
        need(2);
        return values_close(arg(0), arg(1), cfg.tolerance);
    }
    if (name == "msym") {
        need(2);
        int n = static_cast<int>(as_integer(arg(1), name));
        RealPartition beta = as_partition(e.args[0], cfg, env);
        return SymSeries::make(n, cfg.window, {{beta, Complex(1.0, 0.0)}});
    }
    if (name == "esym" || name == "hsym" || name == "psym") {
        need(2);
        int k = static_cast<int>(as_integer(arg(0), name));
        int n = static_cast<int>(as_integer(arg(1), name));
        if (name == "esym") return elementary(k, n, cfg.window);
        if (name == "hsym") return complete(k, n, cfg.window);
        return powersum(k, n, cfg.window);
    }
    if (name == "ebasis" || name == "hbasis" || name == "pbasis") {
        need(2);
        RealPartition beta = as_partition(e.args[0], cfg, env);
        int n = static_cast<int>(as_integer(arg(1), name));
        return basis_product(family_from_name(name[0]), beta, branch, n,
                             cfg.window);
    }
    if (name == "bdefect_e" || name == "bdefect_h" || name == "bdefect_p") {
        need(2);
        RealPartition beta = as_partition(e.args[0], cfg, env);
        int n = static_cast<int>(as_integer(arg(1), name));
        CollectedSym r = basis_product_full(family_from_name(name[8]), beta,
                                            branch, n, cfg.window);
        return Complex(r.symmetry_defect, 0.0);
    }
    if (name == "tri_e" || name == "tri_h" || name == "tri_p") {
        need(2);
        RealPartition beta = as_partition(e.args[0], cfg, env);
        int n = static_cast<int>(as_integer(arg(1), name));
        return triangularity_check(family_from_name(name[4]), beta, n,
                                   cfg.window);
    }
    if (name == "omega") {
        need(1);
        return omega(as_sym(arg(0), name));
    }
    if (name == "embed") {
        need(2);
        Exponent k = as_rational(arg(0), name);
        if (!exp_is_integer(k)) throw Error("embed: integer required");
        return embed(numerator(k), as_integer(arg(1), name));
    }
    if (name == "pfsum") {
        need(1);
        return factorial_sum_element(as_integer(arg(0), name));
    }
    if (name == "isint") {
        need(1);
        auto r = is_integral(as_pseudo(arg(0), name));
        if (!r) return std::string("none");
        return Exponent(*r);
    }
    throw Error("unknown function '" + name + "'");
}

} // namespace detail

inline Value eval(const ExprPtr& e, const SessionConfig& cfg, Environment& env) {
    switch (e->kind) {
        case Expr::Kind::rational:
            return e->value;
        case Expr::Kind::imaginary:
            return Complex(0.0, exp_to_double(e->value));
        case Expr::Kind::variable:
            return Series::monomial(cfg.orientation, cfg.window, Exponent(1),
                                    Complex(1.0, 0.0));
        case Expr::Kind::ident: {
            auto it = env.find(e->name);
            if (it == env.end())
                throw Error("unbound name '" + e->name + "' (line " +
                            std::to_string(e->line) + ", column " +
                            std::to_string(e->column) + ")");
            return it->second;
        }
        case Expr::Kind::negate:
            return detail::eval_binary('-', Value(Exponent(0)),
                                       eval(e->lhs, cfg, env), cfg);
        case Expr::Kind::binary:
            return detail::eval_binary(e->op, eval(e->lhs, cfg, env),
                                       eval(e->rhs, cfg, env), cfg);
        case Expr::Kind::power:
            return detail::eval_power(eval(e->lhs, cfg, env), e->exponent,
                                      e->has_branch ? e->branch : 0, cfg);
        case Expr::Kind::call:
            return detail::eval_call(*e, cfg, env);
        case Expr::Kind::list:
            throw Error("a list is only meaningful as a function argument");
    }
    throw Error("eval: unknown node");
}

inline std::string sym_to_string(const SymSeries& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [beta, c] : f.coeffs()) {
        if (!first) os << " + ";
        first = false;
        std::string cs = coeff_repr(c);
        if (cs != "1" || beta.length() == 0) os << cs;
        if (beta.length() > 0) {
            if (cs != "1") os << "*";
            os << "m" << beta.str();
        }
    }
    if (!first) os << " + ";
    os << "O(|" << exp_to_string(f.cutoff()) << "|)";
    return os.str();
}

inline std::string pseudo_to_string(const Pseudointeger& a) {
    std::ostringstream os;
    os << "pseudointeger(bound " << a.bound() << "; ";
    for (long n = 2; n <= a.bound(); ++n) {
        if (n > 2) os << ", ";
        os << "k" << n << "=" << a.residue(n);
    }
    os << ")";
    return os.str();
}

inline std::string value_to_text(const Value& v) {
    switch (v.index()) {
        case 0: return exp_to_string(std::get<Exponent>(v));
        case 1: return coeff_repr(std::get<Complex>(v));
        case 2: return series_to_string(std::get<Series>(v));
        case 3: return sym_to_string(std::get<SymSeries>(v));
        case 4: return pseudo_to_string(std::get<Pseudointeger>(v));
        case 5: return std::get<bool>(v) ? "true" : "false";
        default: return std::get<std::string>(v);
    }
}

inline Json value_to_json(const Value& v) {
    switch (v.index()) {
        case 0:
            return Json{{"type", "rational"},
                        {"value", exp_to_string(std::get<Exponent>(v))}};
        case 1: {
            const Complex& z = std::get<Complex>(v);
            return Json{{"type", "complex"}, {"re", z.real()}, {"im", z.imag()}};
        }
        case 2: return series_to_json(std::get<Series>(v));
        case 3: return sym_to_json(std::get<SymSeries>(v));
        case 4: return pseudointeger_to_json(std::get<Pseudointeger>(v));
        case 5: return Json{{"type", "bool"}, {"value", std::get<bool>(v)}};
        default:
            return Json{{"type", "string"}, {"value", std::get<std::string>(v)}};
    }
}

/// Executes newline-separated statements ('#' starts a comment). Prints one
/// result per statement; stops at the first error with a diagnostic naming
/// the statement. Returns a process exit status.
inline int run_batch(std::istream& in, std::ostream& out, std::ostream& err,
                     const SessionConfig& cfg, bool emit_json) {
    config::set_tolerance(cfg.tolerance);
    Environment env;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        try {
            auto [name, expr] = parse_statement(line, lineno);
            if (!expr) continue;
            Value v = eval(expr, cfg, env);
            if (name) env[*name] = v;
            if (emit_json) {
                Json j{{"line", lineno},
                       {"name", name ? Json(*name) : Json(nullptr)},
                       {"value", value_to_json(v)}};
                out << j.dump() << "\n";
            } else {
                if (name)
                    out << *name << " = " << value_to_text(v) << "\n";
                else
                    out << value_to_text(v) << "\n";
            }
        } catch (const Error& ex) {
            err << "error: statement at line " << lineno << ": " << ex.what()
                << "\n";
            return 1;
        }
    }
    return 0;
}

/// Read-eval-print loop with a persistent environment; errors are reported
/// and the session continues.
inline int run_repl(std::istream& in, std::ostream& out, std::ostream& err,
                    const SessionConfig& cfg, bool emit_json) {
    config::set_tolerance(cfg.tolerance);
    Environment env;
    std::string line;
    int lineno = 0;
    out << "anser " << orientation_name(cfg.orientation) << " session, window "
        << exp_to_string(cfg.window) << " (quit to exit)\n";
    out << "> " << std::flush;
    while (std::getline(in, line)) {
        ++lineno;
        if (line == "quit" || line == "exit") break;
        try {
            auto [name, expr] = parse_statement(line, lineno);
            if (expr) {
                Value v = eval(expr, cfg, env);
                if (name) env[*name] = v;
                if (emit_json)
                    out << value_to_json(v).dump() << "\n";
                else
                    out << value_to_text(v) << "\n";
            }
        } catch (const Error& ex) {
            err << "error: " << ex.what() << "\n";
        }
        out << "> " << std::flush;
    }
    return 0;
}

} // namespace anser

#endif
