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

#ifndef ANSER_SCALAR_HPP
#define ANSER_SCALAR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>

#include "anser/config.hpp"
#include "anser/errors.hpp"
#include "anser/rational.hpp"

namespace anser {

using Complex = std::complex<double>;

/// Index selecting one value of a multivalued power z^{t;n}.
using BranchIndex = std::int64_t;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Polar form with modulus >= 0 and argument in [0, 2*pi).
/// A zero modulus forces a zero argument.
struct Polar {
    double modulus = 0.0;
    double argument = 0.0;
};

inline bool scalar_is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Decomposes z as modulus * e^{i*argument} with argument in [0, 2*pi).
/// Arguments within the global tolerance of 2*pi wrap to 0.
inline Polar to_polar(const Complex& z) {
    if (!scalar_is_finite(z)) throw InvalidScalar("to_polar: non-finite input");
    if (z == Complex(0.0, 0.0)) return Polar{0.0, 0.0};
    double r = std::abs(z);
    double theta = std::atan2(z.imag(), z.real());
    if (theta < 0.0) theta += two_pi;
    if (theta >= two_pi - config::tolerance()) theta = 0.0;
    if (theta < 0.0) theta = 0.0;
    return Polar{r, theta};
}

inline double arg_of(const Complex& z) { return to_polar(z).argument; }

/// The nth value of z to the power t: |z|^t * e^{i*t*(arg z + 2*n*pi)}.
/// For z = 0 the result is 0 when t > 0 and undefined otherwise.
inline Complex cpow(const Complex& z, const Exponent& t, BranchIndex n) {
    if (!scalar_is_finite(z)) throw InvalidScalar("cpow: non-finite base");
    if (z == Complex(0.0, 0.0)) {
        if (t > 0) return Complex(0.0, 0.0);
        throw UndefinedPower("cpow: 0 raised to a nonpositive exponent");
    }
    Polar p = to_polar(z);
    double td = exp_to_double(t);
    double mod = std::pow(p.modulus, td);
    double phase = td * (p.argument + two_pi * static_cast<double>(n));
    return Complex(mod * std::cos(phase), mod * std::sin(phase));
}

/// Branch on which (z1*z2)^t matches z1^{t;n} * z2^{t;m}:
/// n+m, or n+m+1 once the argument sum reaches 2*pi.
inline BranchIndex product_branch(const Complex& z1, const Complex& z2,
                                  BranchIndex n, BranchIndex m) {
    if (z1 == Complex(0.0, 0.0) || z2 == Complex(0.0, 0.0))
        throw InvalidScalar("product_branch: zero input");
    double sum = to_polar(z1).argument + to_polar(z2).argument;
    return (sum >= two_pi - config::tolerance()) ? n + m + 1 : n + m;
}

namespace detail {

/// floor(s * (theta + 2*n*pi) / 2*pi); values within tolerance of an
/// integer snap to it before the floor is taken, matching the wrapping of
/// arguments near 2*pi in to_polar.
inline BranchIndex branch_floor(double theta, const Exponent& s,
                                BranchIndex n) {
    Exponent sn = s * Exponent(n);
    double q = exp_to_double(s) * (theta / two_pi) + exp_to_double(sn);
    double r = std::round(q);
    if (std::abs(q - r) <= config::tolerance())
        return static_cast<BranchIndex>(r);
    return static_cast<BranchIndex>(std::floor(q));
}

} // namespace detail

/// Branch j with z^{s*t;n} = (z^{s;n})^{t;j}, namely
/// floor(s * (arg z + 2*n*pi) / 2*pi).
inline BranchIndex iterate_branch(const Complex& z, const Exponent& s,
                                  BranchIndex n) {
    if (z == Complex(0.0, 0.0))
        throw InvalidScalar("iterate_branch: zero input");
    return detail::branch_floor(to_polar(z).argument, s, n);
}

/// t*(t-1)*...*(t-m+1), exact in rational arithmetic.
inline Exponent falling_factorial(const Exponent& t, unsigned m) {
    Exponent acc = 1;
    Exponent factor = t;
    for (unsigned i = 0; i < m; ++i) {
        acc *= factor;
        factor -= 1;
    }
    return acc;
}

inline Complex falling_factorial(const Complex& t, unsigned m) {
    Complex acc = 1.0;
    Complex factor = t;
    for (unsigned i = 0; i < m; ++i) {
        acc *= factor;
        factor -= 1.0;
    }
    return acc;
}

/// Finite multiset of exponents: each key carries a positive multiplicity.
class Multiset {
public:
    Multiset() = default;

    void insert(const Exponent& key, unsigned multiplicity = 1) {
        if (multiplicity == 0) return;
        entries_[key] += multiplicity;
    }

    /// |M|: total number of elements counted with multiplicity.
    unsigned size() const {
        unsigned total = 0;
        for (const auto& [k, m] : entries_) total += m;
        return total;
    }

    bool empty() const { return entries_.empty(); }
    const std::map<Exponent, unsigned>& entries() const { return entries_; }

private:
    std::map<Exponent, unsigned> entries_;
};

/// Multinomial coefficient binom(t, M) = falling_factorial(t, |M|) / prod M(j)!.
inline Exponent multiset_binomial_exact(const Exponent& t, const Multiset& m) {
    Exponent num = falling_factorial(t, m.size());
    BigInt den = 1;
    for (const auto& [key, mult] : m.entries())
        for (unsigned i = 2; i <= mult; ++i) den *= i;
    return num / Exponent(den);
}

inline Complex multiset_binomial(const Exponent& t, const Multiset& m) {
    return Complex(exp_to_double(multiset_binomial_exact(t, m)), 0.0);
}

// Coefficient contract for Complex. Series templates use these entry points
// so that coefficients may be plain complex numbers or, recursively, series.

inline bool coeff_is_zero(const Complex& z, double tol) {
    return std::abs(z) <= tol;
}

inline Complex coeff_add(const Complex& a, const Complex& b) { return a + b; }
inline Complex coeff_mul(const Complex& a, const Complex& b) { return a * b; }
inline Complex coeff_neg(const Complex& a) { return -a; }
inline Complex coeff_scale(const Complex& a, const Complex& s) { return a * s; }

inline Complex coeff_inv(const Complex& a) {
    if (coeff_is_zero(a, config::tolerance()))
        throw DivisionByZero("coeff_inv: zero coefficient");
    return Complex(1.0, 0.0) / a;
}

inline Complex coeff_pow(const Complex& a, const Exponent& t, BranchIndex n) {
    return cpow(a, t, n);
}

/// Argument of a coefficient; for nested series this recurses to the
/// leading complex coefficient.
inline double coeff_arg(const Complex& a) {
    if (a == Complex(0.0, 0.0))
        throw UndefinedArgument("coeff_arg: zero coefficient");
    return to_polar(a).argument;
}

inline Complex coeff_zero_like(const Complex&) { return Complex(0.0, 0.0); }
inline Complex coeff_one_like(const Complex&) { return Complex(1.0, 0.0); }

/// Largest coefficient modulus, used by approximate comparisons.
inline double coeff_sup_abs(const Complex& a) { return std::abs(a); }

inline bool coeff_close(const Complex& a, const Complex& b, double tol) {
    return std::abs(a - b) <= tol;
}

} // namespace anser

#endif
