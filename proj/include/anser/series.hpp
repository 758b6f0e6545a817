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

#ifndef ANSER_SERIES_HPP
#define ANSER_SERIES_HPP

#include <concepts>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "anser/config.hpp"
#include "anser/errors.hpp"
#include "anser/rational.hpp"
#include "anser/scalar.hpp"

namespace anser {

/// Which finiteness condition the series satisfies. Noetherian series have a
/// minimum degree and are truncated above (power-series-like); Artinian
/// series are the mirror image (maximum degree, truncated below).
enum class Orientation { noetherian, artinian };

inline Orientation flip(Orientation o) {
    return o == Orientation::noetherian ? Orientation::artinian
                                        : Orientation::noetherian;
}

inline const char* orientation_name(Orientation o) {
    return o == Orientation::noetherian ? "noetherian" : "artinian";
}

/// Exponent monoid for inversion. The naturals restriction exists to
/// demonstrate that a series is invertible only when its degree has an
/// additive inverse in the monoid.
enum class ExponentMode { rationals, naturals };

/// Anything usable as a series coefficient: complex numbers or,
/// recursively, series over a disjoint variable.
template <class C>
concept Coefficient = requires(const C& a, const C& b, double tol,
                               const Exponent& t, BranchIndex n,
                               const Complex& s) {
    { coeff_is_zero(a, tol) } -> std::convertible_to<bool>;
    { coeff_add(a, b) } -> std::convertible_to<C>;
    { coeff_mul(a, b) } -> std::convertible_to<C>;
    { coeff_neg(a) } -> std::convertible_to<C>;
    { coeff_scale(a, s) } -> std::convertible_to<C>;
    { coeff_inv(a) } -> std::convertible_to<C>;
    { coeff_pow(a, t, n) } -> std::convertible_to<C>;
    { coeff_arg(a) } -> std::convertible_to<double>;
    { coeff_one_like(a) } -> std::convertible_to<C>;
    { coeff_zero_like(a) } -> std::convertible_to<C>;
    { coeff_sup_abs(a) } -> std::convertible_to<double>;
    { coeff_close(a, b, tol) } -> std::convertible_to<bool>;
};

/// Formal series with rational exponents, stored to finite precision.
///
/// The window bound delimits the region over which the stored terms are
/// exact: exponents below the bound for Noetherian series, above it for
/// Artinian ones. Every operation propagates windows so that no reported
/// coefficient could be altered by unseen terms. Values are immutable.
template <Coefficient C>
class BasicSeries {
public:
    using coeff_type = C;
    using term_map = std::map<Exponent, C>;

    /// The zero series with the given truncation window.
    BasicSeries(Orientation o, Exponent window)
        : orientation_(o), window_(std::move(window)) {}

    /// Validating constructor: exponents must be distinct and lie strictly
    /// inside the exact region of the window.
    static BasicSeries make(Orientation o,
                            const std::vector<std::pair<Exponent, C>>& terms,
                            const Exponent& window) {
        BasicSeries s(o, window);
        for (const auto& [e, c] : terms) {
            if (!s.in_exact_region(e))
                throw WindowViolation("term x^" + exp_to_string(e) +
                                      " lies outside the exact region of window " +
                                      exp_to_string(window));
            if (s.terms_.count(e))
                throw DuplicateExponent("duplicate exponent " + exp_to_string(e));
            if (!coeff_is_zero(c, config::tolerance())) s.terms_.emplace(e, c);
        }
        return s;
    }

    /// Constant series c * x^0 (zero series when c vanishes).
    static BasicSeries constant(Orientation o, const Exponent& window,
                                const C& c) {
        BasicSeries s(o, window);
        if (!s.in_exact_region(Exponent(0)))
            throw WindowViolation("window excludes the constant term");
        if (!coeff_is_zero(c, config::tolerance()))
            s.terms_.emplace(Exponent(0), c);
        return s;
    }

    /// Monomial c * x^e.
    static BasicSeries monomial(Orientation o, const Exponent& window,
                                const Exponent& e, const C& c) {
        return make(o, {{e, c}}, window);
    }

    /// Internal builder: drops terms outside the exact region and prunes
    /// coefficients at the given tolerance instead of rejecting them.
    /// Intermediate stages of an algorithm prune at 0 (exact zeros only);
    /// a small coefficient may yet be scaled back to significance.
    static BasicSeries normalized(Orientation o, const Exponent& window,
                                  term_map terms, double prune) {
        BasicSeries s(o, window);
        for (auto& [e, c] : terms)
            if (s.in_exact_region(e) && !coeff_is_zero(c, prune))
                s.terms_.emplace(e, std::move(c));
        return s;
    }

    static BasicSeries normalized(Orientation o, const Exponent& window,
                                  term_map terms) {
        return normalized(o, window, std::move(terms), config::tolerance());
    }

    Orientation orientation() const { return orientation_; }
    const Exponent& window() const { return window_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool in_exact_region(const Exponent& e) const {
        return orientation_ == Orientation::noetherian ? e < window_
                                                       : e > window_;
    }

    /// Minimum stored exponent for Noetherian series, maximum for Artinian.
    /// Empty for the zero series (the +/- infinity sentinel).
    std::optional<Exponent> degree() const {
        if (terms_.empty()) return std::nullopt;
        return orientation_ == Orientation::noetherian ? terms_.begin()->first
                                                       : terms_.rbegin()->first;
    }

    /// Degree, with the window bound standing in for the zero series.
    /// This is the sound anchor for window propagation: the unknown part
    /// of a zero series still starts at the bound.
    Exponent effective_degree() const {
        auto d = degree();
        return d ? *d : window_;
    }

    const C& leading_coeff() const {
        if (terms_.empty()) throw Error("leading_coeff of the zero series");
        return orientation_ == Orientation::noetherian ? terms_.begin()->second
                                                       : terms_.rbegin()->second;
    }

    /// Stored coefficient or zero; the exponent must be inside the window.
    C coefficient_at(const Exponent& e) const {
        if (!in_exact_region(e))
            throw PrecisionExceeded("coefficient of x^" + exp_to_string(e) +
                                    " is beyond window " + exp_to_string(window_));
        auto it = terms_.find(e);
        if (it != terms_.end()) return it->second;
        if (!terms_.empty()) return coeff_zero_like(terms_.begin()->second);
        return zero_coeff_fallback();
    }

    /// The tighter (more conservative) of two window bounds.
    Exponent tighter(const Exponent& a, const Exponent& b) const {
        if (orientation_ == Orientation::noetherian) return a < b ? a : b;
        return a > b ? a : b;
    }

private:
    static C zero_coeff_fallback() {
        if constexpr (std::same_as<C, Complex>) {
            return Complex(0.0, 0.0);
        } else {
            throw PrecisionExceeded(
                "coefficient_at on an empty nested series: no coefficient "
                "shape to produce a zero of");
        }
    }

    Orientation orientation_;
    Exponent window_;
    term_map terms_;
};

using Series = BasicSeries<Complex>;

namespace detail {

template <Coefficient C>
void require_same_orientation(const BasicSeries<C>& f, const BasicSeries<C>& g,
                              const char* op) {
    if (f.orientation() != g.orientation())
        throw OrientationMismatch(std::string(op) +
                                  ": operands have different orientations");
}

} // namespace detail

template <Coefficient C>
BasicSeries<C> add(const BasicSeries<C>& f, const BasicSeries<C>& g,
                   double prune) {
    detail::require_same_orientation(f, g, "add");
    Exponent w = f.tighter(f.window(), g.window());
    typename BasicSeries<C>::term_map out = f.terms();
    for (const auto& [e, c] : g.terms()) {
        auto it = out.find(e);
        if (it == out.end())
            out.emplace(e, c);
        else
            it->second = coeff_add(it->second, c);
    }
    return BasicSeries<C>::normalized(f.orientation(), w, std::move(out), prune);
}

template <Coefficient C>
BasicSeries<C> add(const BasicSeries<C>& f, const BasicSeries<C>& g) {
    return add(f, g, config::tolerance());
}

template <Coefficient C>
BasicSeries<C> neg(const BasicSeries<C>& f) {
    typename BasicSeries<C>::term_map out;
    for (const auto& [e, c] : f.terms()) out.emplace(e, coeff_neg(c));
    return BasicSeries<C>::normalized(f.orientation(), f.window(),
                                      std::move(out), 0.0);
}

template <Coefficient C>
BasicSeries<C> sub(const BasicSeries<C>& f, const BasicSeries<C>& g) {
    return add(f, neg(g));
}

template <Coefficient C>
BasicSeries<C> scalar_mul(const Complex& z, const BasicSeries<C>& f,
                          double prune) {
    typename BasicSeries<C>::term_map out;
    for (const auto& [e, c] : f.terms()) out.emplace(e, coeff_scale(c, z));
    return BasicSeries<C>::normalized(f.orientation(), f.window(),
                                      std::move(out), prune);
}

template <Coefficient C>
BasicSeries<C> scalar_mul(const Complex& z, const BasicSeries<C>& f) {
    return scalar_mul(z, f, config::tolerance());
}

/// Exact multiplication by the monomial c * x^d: exponents and window shift
/// by d, coefficients scale by c. No precision is lost.
template <Coefficient C>
BasicSeries<C> shift_scale(const BasicSeries<C>& f, const Exponent& d,
                           const C& c, double prune) {
    typename BasicSeries<C>::term_map out;
    for (const auto& [e, k] : f.terms()) out.emplace(e + d, coeff_mul(k, c));
    return BasicSeries<C>::normalized(f.orientation(), f.window() + d,
                                      std::move(out), prune);
}

template <Coefficient C>
BasicSeries<C> shift_scale(const BasicSeries<C>& f, const Exponent& d,
                           const C& c) {
    return shift_scale(f, d, c, config::tolerance());
}

template <Coefficient C>
BasicSeries<C> mul(const BasicSeries<C>& f, const BasicSeries<C>& g,
                   double prune) {
    detail::require_same_orientation(f, g, "mul");
    // Unknown terms of f start at its bound and meet g no earlier than
    // deg(g), and vice versa; everything below/above that is exact.
    Exponent w = f.tighter(f.window() + g.effective_degree(),
                           g.window() + f.effective_degree());
    typename BasicSeries<C>::term_map out;
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms()) {
            Exponent e = e1 + e2;
            C prod = coeff_mul(c1, c2);
            auto it = out.find(e);
            if (it == out.end())
                out.emplace(std::move(e), std::move(prod));
            else
                it->second = coeff_add(it->second, prod);
        }
    return BasicSeries<C>::normalized(f.orientation(), w, std::move(out), prune);
}

template <Coefficient C>
BasicSeries<C> mul(const BasicSeries<C>& f, const BasicSeries<C>& g) {
    return mul(f, g, config::tolerance());
}

/// Multiplicative inverse, computed by factoring out the leading term and
/// summing the geometric series of the remainder. Under the naturals
/// restriction the degree must be invertible in the monoid, i.e. zero.
template <Coefficient C>
BasicSeries<C> invert(const BasicSeries<C>& f,
                      ExponentMode mode = ExponentMode::rationals) {
    if (f.is_zero()) throw DivisionByZero("invert: zero series");
    if (coeff_is_zero(f.leading_coeff(), config::tolerance()))
        throw DivisionByZero("invert: leading coefficient vanishes");
    Exponent d = *f.degree();
    if (mode == ExponentMode::naturals && d != 0)
        throw NoExponentInverse("invert: degree " + exp_to_string(d) +
                                " has no additive inverse among the naturals");
    const C& c = f.leading_coeff();
    C cinv = coeff_inv(c);
    // u = f / (c x^d) - 1 has positive (resp. negative) degree. The loop
    // runs unpruned; only the final result drops negligible coefficients.
    BasicSeries<C> u = shift_scale(f, -d, cinv, 0.0);
    {
        typename BasicSeries<C>::term_map t = u.terms();
        t.erase(Exponent(0));
        u = BasicSeries<C>::normalized(u.orientation(), u.window(), std::move(t),
                                       0.0);
    }
    BasicSeries<C> acc =
        BasicSeries<C>::constant(f.orientation(), u.window(), coeff_one_like(c));
    BasicSeries<C> term = acc;
    while (true) {
        term = truncate(mul(term, neg(u), 0.0), u.window(), 0.0);
        if (term.is_zero()) break;
        acc = add(acc, term, 0.0);
    }
    return shift_scale(acc, -d, cinv);
}

/// The isomorphism x^a -> x^{-a}: flips orientation, negates exponents
/// and the window bound. An involution.
template <Coefficient C>
BasicSeries<C> dualize(const BasicSeries<C>& f) {
    typename BasicSeries<C>::term_map out;
    for (const auto& [e, c] : f.terms()) out.emplace(-e, c);
    return BasicSeries<C>::normalized(flip(f.orientation()), -f.window(),
                                      std::move(out));
}

/// Narrows the window; loosening is rejected.
template <Coefficient C>
BasicSeries<C> truncate(const BasicSeries<C>& f, const Exponent& new_bound,
                        double prune) {
    bool looser = f.orientation() == Orientation::noetherian
                      ? new_bound > f.window()
                      : new_bound < f.window();
    if (looser)
        throw WindowViolation("truncate: bound " + exp_to_string(new_bound) +
                              " is looser than " + exp_to_string(f.window()));
    return BasicSeries<C>::normalized(f.orientation(), new_bound, f.terms(),
                                      prune);
}

template <Coefficient C>
BasicSeries<C> truncate(const BasicSeries<C>& f, const Exponent& new_bound) {
    return truncate(f, new_bound, config::tolerance());
}

/// True when every coefficient difference on the intersection of the exact
/// regions is within tol.
template <Coefficient C>
bool approx_eq(const BasicSeries<C>& f, const BasicSeries<C>& g, double tol) {
    detail::require_same_orientation(f, g, "approx_eq");
    BasicSeries<C> diff = add(f, neg(g), 0.0);
    for (const auto& [e, c] : diff.terms())
        if (coeff_sup_abs(c) > tol) return false;
    return true;
}

template <Coefficient C>
bool approx_eq(const BasicSeries<C>& f, const BasicSeries<C>& g) {
    return approx_eq(f, g, config::tolerance());
}

// Coefficient contract for series, enabling nested coefficients.

template <Coefficient C>
bool coeff_is_zero(const BasicSeries<C>& s, double) {
    return s.is_zero();
}

template <Coefficient C>
BasicSeries<C> coeff_add(const BasicSeries<C>& a, const BasicSeries<C>& b) {
    return add(a, b);
}

template <Coefficient C>
BasicSeries<C> coeff_mul(const BasicSeries<C>& a, const BasicSeries<C>& b) {
    return mul(a, b);
}

template <Coefficient C>
BasicSeries<C> coeff_neg(const BasicSeries<C>& a) {
    return neg(a);
}

template <Coefficient C>
BasicSeries<C> coeff_scale(const BasicSeries<C>& a, const Complex& s) {
    return scalar_mul(s, a);
}

template <Coefficient C>
BasicSeries<C> coeff_inv(const BasicSeries<C>& a) {
    return invert(a);
}

// Defined in power.hpp: exponentiation of a nested coefficient.
template <Coefficient C>
BasicSeries<C> coeff_pow(const BasicSeries<C>& a, const Exponent& t,
                         BranchIndex n);

/// Argument of a series: the argument of its leading coefficient,
/// recursing through nested coefficients down to a complex number.
template <Coefficient C>
double coeff_arg(const BasicSeries<C>& a) {
    if (a.is_zero()) throw UndefinedArgument("argument of the zero series");
    return coeff_arg(a.leading_coeff());
}

template <Coefficient C>
BasicSeries<C> coeff_zero_like(const BasicSeries<C>& a) {
    return BasicSeries<C>(a.orientation(), a.window());
}

template <Coefficient C>
BasicSeries<C> coeff_one_like(const BasicSeries<C>& a) {
    if (a.is_zero())
        throw Error("coeff_one_like: shape of an empty nested series is unknown");
    return BasicSeries<C>::constant(a.orientation(), a.window(),
                                    coeff_one_like(a.leading_coeff()));
}

template <Coefficient C>
double coeff_sup_abs(const BasicSeries<C>& a) {
    double m = 0.0;
    for (const auto& [e, c] : a.terms()) {
        double v = coeff_sup_abs(c);
        if (v > m) m = v;
    }
    return m;
}

template <Coefficient C>
bool coeff_close(const BasicSeries<C>& a, const BasicSeries<C>& b, double tol) {
    return approx_eq(a, b, tol);
}

// Rendering, mainly for the REPL and diagnostics.

inline std::string coeff_repr(const Complex& z) {
    std::ostringstream os;
    double re = z.real(), im = z.imag();
    double tol = config::tolerance();
    if (std::abs(im) <= tol) {
        os << re;
    } else if (std::abs(re) <= tol) {
        os << im << "i";
    } else {
        os << "(" << re << (im < 0 ? "" : "+") << im << "i)";
    }
    return os.str();
}

template <Coefficient C>
std::string series_to_string(const BasicSeries<C>& f);

template <Coefficient C>
std::string coeff_repr(const BasicSeries<C>& s) {
    return "[" + series_to_string(s) + "]";
}

template <Coefficient C>
std::string series_to_string(const BasicSeries<C>& f) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Exponent& e, const C& c) {
        std::string cs = coeff_repr(c);
        bool negated = cs.size() > 1 && cs[0] == '-' && cs[1] != '(';
        if (!first && negated) cs.erase(0, 1);
        if (!first) os << (negated ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << cs;
            return;
        }
        if (cs != "1") os << cs << "*";
        os << "x";
        if (e != 1) {
            if (exp_is_integer(e) && e > 0)
                os << "^" << exp_to_string(e);
            else
                os << "^(" << exp_to_string(e) << ")";
        }
    };
    if (f.orientation() == Orientation::noetherian) {
        for (const auto& [e, c] : f.terms()) emit(e, c);
    } else {
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
            emit(it->first, it->second);
    }
    if (!first) os << " + ";
    os << "O(x^" << exp_to_string(f.window()) << ")";
    return os.str();
}

} // namespace anser

#endif
