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

#ifndef ANSER_COMPOSE_HPP
#define ANSER_COMPOSE_HPP

#include <cstddef>

#include "anser/calculus.hpp"
#include "anser/power.hpp"
#include "anser/series.hpp"

namespace anser {

/// f(g;n) = sum_a c_a * g^{a;n}, accumulated until term degrees leave the
/// result window. g must have positive degree in either orientation;
/// deg(f(g;n)) = deg(f) * deg(g).
template <Coefficient C>
BasicSeries<C> compose(const BasicSeries<C>& f, const BasicSeries<C>& g,
                       BranchIndex n) {
    detail::require_same_orientation(f, g, "compose");
    Exponent dg = g.effective_degree();
    if (dg <= 0)
        throw NonPositiveDegree("compose: inner series must have positive degree");
    // Unknown terms of f enter at degree >= bound(f)*deg(g); the power of g
    // anchored at deg(f) carries the tightest of the power windows.
    Exponent bound = f.tighter(f.window() * dg,
                               f.effective_degree() * dg + g.window() - dg);
    BasicSeries<C> acc(f.orientation(), bound);
    for (const auto& [a, ca] : f.terms()) {
        if (!acc.in_exact_region(a * dg)) continue;
        acc = add(acc, shift_scale(pow(g, a, n), Exponent(0), ca));
    }
    return acc;
}

/// Leading-coefficient quotient of the two associations
/// compose(compose(f,g,m),h,m) and compose(f,compose(g,h,m),m) for
/// single-term inputs. The two sides always share degree; the quotient is
/// the constant by which they differ.
inline Complex associativity_defect(const Series& f, const Series& g,
                                    const Series& h, BranchIndex m) {
    if (f.terms().size() != 1 || g.terms().size() != 1 || h.terms().size() != 1)
        throw Error("associativity_defect: expects single-term series");
    Series left = compose(compose(f, g, m), h, m);
    Series right = compose(f, compose(g, h, m), m);
    if (left.is_zero() || right.is_zero())
        throw Error("associativity_defect: a composition vanished");
    if (*left.degree() != *right.degree())
        throw Error("associativity_defect: degree mismatch between associations");
    return left.leading_coeff() / right.leading_coeff();
}

/// Compositional inverse g with compose(f, g, n) = x, built by repeatedly
/// cancelling the lowest residual term. Requires positive degree and a
/// leading coefficient on the positive real axis (within tolerance), which
/// keeps every branch choice along the way trivial.
inline Series comp_inverse(const Series& f, BranchIndex n) {
    if (f.is_zero() || *f.degree() <= 0)
        throw NonPositiveDegree("comp_inverse: series must have positive degree");
    Complex lead = f.leading_coeff();
    if (std::abs(lead.imag()) > config::tolerance() ||
        lead.real() <= config::tolerance())
        throw NonPositiveLeading(
            "comp_inverse: leading coefficient must be a positive real");

    Exponent b = *f.degree();
    Exponent target = (f.window() + 1 - b) / b;
    Orientation o = f.orientation();

    // Seed with the exact leading term of the inverse.
    Series g =
        Series::monomial(o, target, 1 / b, cpow(lead, Exponent(-1) / b, 0));
    Series fprime = derivative(f);
    Series identity =
        Series::monomial(o, f.window() / b, Exponent(1), Complex(1.0, 0.0));

    const std::size_t max_steps = 10000;
    std::optional<Exponent> last_residual_degree;
    for (std::size_t step = 0;; ++step) {
        if (step >= max_steps)
            throw PrecisionExceeded("comp_inverse: correction loop exceeded bound");
        Series residual = sub(compose(f, g, n), identity);
        if (residual.is_zero()) break;
        Exponent e = *residual.degree();
        if (last_residual_degree) {
            bool progress = o == Orientation::noetherian
                                ? e > *last_residual_degree
                                : e < *last_residual_degree;
            if (!progress)
                throw PrecisionExceeded("comp_inverse: no progress in recursion");
        }
        last_residual_degree = e;
        Series sensitivity = compose(fprime, g, n);
        Complex slope = sensitivity.leading_coeff();
        // The correction delta*x^a perturbs f(g) at leading order by
        // slope * delta * x^{a + deg(f'(g))}.
        Exponent a = e - *sensitivity.degree();
        if (!g.in_exact_region(a)) break;
        Complex delta = -residual.leading_coeff() / slope;
        g = add(g, Series::monomial(o, target, a, delta));
    }
    return g;
}

/// Coefficient of the inverse power via residues:
/// (b/a) * [x^{a-b}] (x/f)^{a;0}. For b = 1 this reads off the
/// coefficients of the compositional inverse itself.
inline Complex lagrange_coefficient(const Series& f, const Exponent& a,
                                    const Exponent& b) {
    if (f.is_zero() || *f.degree() <= 0)
        throw NonPositiveDegree("lagrange: series must have positive degree");
    if (*f.degree() != 1)
        throw Error("lagrange: a delta series (degree one) is required");
    Complex lead = f.leading_coeff();
    if (std::abs(lead.imag()) > config::tolerance() ||
        lead.real() <= config::tolerance())
        throw NonPositiveLeading(
            "lagrange: leading coefficient must be a positive real");
    if (a == 0) throw Error("lagrange: exponent a must be nonzero");
    Series x_over_f =
        shift_scale(invert(f), Exponent(1), Complex(1.0, 0.0));
    Series p = pow(x_over_f, a, 0);
    Complex coeff = p.coefficient_at(a - b);
    return coeff * exp_to_double(b / a);
}

} // namespace anser

#endif
