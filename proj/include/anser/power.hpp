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

#ifndef ANSER_POWER_HPP
#define ANSER_POWER_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "anser/scalar.hpp"
#include "anser/series.hpp"

namespace anser {

/// Argument of a nonzero series: the argument of its leading coefficient.
template <Coefficient C>
double arg_of(const BasicSeries<C>& f) {
    return coeff_arg(f);
}

namespace detail {

/// g = c * x^d * (1 + u); returns u, whose degree is strictly positive for
/// Noetherian series and strictly negative for Artinian ones. Unpruned:
/// binomial factors may scale small coefficients back up.
template <Coefficient C>
BasicSeries<C> unit_remainder(const BasicSeries<C>& g, const Exponent& d,
                              const C& lead_inv) {
    BasicSeries<C> u = shift_scale(g, -d, lead_inv, 0.0);
    typename BasicSeries<C>::term_map t = u.terms();
    t.erase(Exponent(0));
    return BasicSeries<C>::normalized(u.orientation(), u.window(), std::move(t),
                                      0.0);
}

} // namespace detail

/// g(x)^{t;n}, computed by factoring the leading term and expanding the
/// remaining unit by the binomial series: sum_k ff(t,k)/k! * u^k. Binomial
/// coefficients are evaluated in exact rational arithmetic and converted
/// once. The result has degree t*deg(g) and window d*t + (bound(g) - d).
template <Coefficient C>
BasicSeries<C> pow(const BasicSeries<C>& g, const Exponent& t, BranchIndex n) {
    if (g.is_zero()) {
        if (t > 0) return BasicSeries<C>(g.orientation(), g.window() * t);
        throw UndefinedPower("pow: zero series raised to a nonpositive power");
    }
    Exponent d = *g.degree();
    const C& c = g.leading_coeff();
    C cinv = coeff_inv(c);
    BasicSeries<C> u = detail::unit_remainder(g, d, cinv);
    const Exponent& wu = u.window();

    // The k-sum runs unpruned: coefficients of u^k may fall below the
    // global tolerance and still matter once scaled by the binomial
    // factor. Only the final assembly prunes.
    bool natural_t = t >= 0 && exp_is_integer(t);
    BasicSeries<C> acc =
        BasicSeries<C>::constant(g.orientation(), wu, coeff_one_like(c));
    BasicSeries<C> upow = acc;
    Exponent kfact = 1;
    for (unsigned k = 1; ; ++k) {
        if (natural_t && Exponent(k) > t) break;
        upow = truncate(mul(upow, u, 0.0), wu, 0.0);
        if (upow.is_zero()) break;
        kfact *= k;
        Exponent binom = falling_factorial(t, k) / kfact;
        if (binom != 0)
            acc = add(acc, scalar_mul(Complex(exp_to_double(binom), 0.0), upow,
                                      0.0),
                      0.0);
    }
    return shift_scale(acc, d * t, coeff_pow(c, t, n));
}

namespace detail {

template <Coefficient C>
void multiset_terms(const std::vector<std::pair<Exponent, C>>& shifts,
                    std::size_t i, const Exponent& t, bool noetherian,
                    const Exponent& w, const Exponent& degree_sum,
                    const C& prod, Multiset m,
                    typename BasicSeries<C>::term_map& out) {
    if (i == shifts.size()) {
        C term = coeff_scale(
            prod, Complex(exp_to_double(multiset_binomial_exact(t, m)), 0.0));
        auto it = out.find(degree_sum);
        if (it == out.end())
            out.emplace(degree_sum, std::move(term));
        else
            it->second = coeff_add(it->second, term);
        return;
    }
    const auto& [a, r] = shifts[i];
    multiset_terms(shifts, i + 1, t, noetherian, w, degree_sum, prod, m, out);
    Exponent s = degree_sum;
    C p = prod;
    while (true) {
        s += a;
        if (noetherian ? !(s < w) : !(s > w)) break;
        p = coeff_mul(p, r);
        m.insert(a);
        multiset_terms(shifts, i + 1, t, noetherian, w, s, p, m, out);
    }
}

} // namespace detail

/// Direct evaluation of the defining multiset sum: over all multisets M of
/// shifted support exponents inside the window,
/// binom(t, M) * prod (c_{a+d}/c_d) x^a. Intended as an independent check
/// of pow at small supports.
template <Coefficient C>
BasicSeries<C> pow_multiset_oracle(const BasicSeries<C>& g, const Exponent& t,
                                   BranchIndex n) {
    if (g.is_zero()) {
        if (t > 0) return BasicSeries<C>(g.orientation(), g.window() * t);
        throw UndefinedPower("pow: zero series raised to a nonpositive power");
    }
    Exponent d = *g.degree();
    const C& c = g.leading_coeff();
    C cinv = coeff_inv(c);

    std::vector<std::pair<Exponent, C>> shifts;
    for (const auto& [e, k] : g.terms())
        if (e != d) shifts.emplace_back(e - d, coeff_mul(k, cinv));

    Exponent w = g.window() - d;
    bool noe = g.orientation() == Orientation::noetherian;

    typename BasicSeries<C>::term_map out;
    detail::multiset_terms(shifts, 0, t, noe, w, Exponent(0),
                           coeff_one_like(c), Multiset(), out);

    BasicSeries<C> sum =
        BasicSeries<C>::normalized(g.orientation(), w, std::move(out));
    return shift_scale(sum, d * t, coeff_pow(c, t, n));
}

/// Branch on which (f*g)^t equals f^{t;j} * g^{t;k}: j+k, or j+k+1 once
/// the argument sum reaches 2*pi.
template <Coefficient C>
BranchIndex pow_product_branch(const BasicSeries<C>& f, const BasicSeries<C>& g,
                               BranchIndex j, BranchIndex k) {
    double sum = arg_of(f) + arg_of(g);
    return (sum >= two_pi - config::tolerance()) ? j + k + 1 : j + k;
}

/// Branch j with pow(f, s*t, n) = pow(pow(f, s, n), t, j), namely
/// floor(s * (arg f + 2*n*pi) / 2*pi).
template <Coefficient C>
BranchIndex pow_iterate_branch(const BasicSeries<C>& f, const Exponent& s,
                               BranchIndex n) {
    return detail::branch_floor(arg_of(f), s, n);
}

template <Coefficient C>
BasicSeries<C> coeff_pow(const BasicSeries<C>& a, const Exponent& t,
                         BranchIndex n) {
    return pow(a, t, n);
}

} // namespace anser

#endif
