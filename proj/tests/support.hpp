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

#ifndef ANSER_TESTS_SUPPORT_HPP
#define ANSER_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <vector>

#include "anser/anser.hpp"

namespace anser::testing {

struct Rng {
    explicit Rng(unsigned seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    bool flip() { return integer(0, 1) == 1; }

    /// Exact rational p/q with small numerator and denominator.
    Exponent rational(long pmax = 6, long qmax = 4) {
        long q = integer(1, qmax);
        long p = integer(-pmax, pmax);
        return Exponent(p, q);
    }

    Exponent nonzero_rational(long pmax = 6, long qmax = 4) {
        while (true) {
            Exponent r = rational(pmax, qmax);
            if (r != 0) return r;
        }
    }

    Complex complex(double radius = 3.0) {
        return Complex(real(-radius, radius), real(-radius, radius));
    }

    Complex nonzero_complex(double radius = 3.0) {
        while (true) {
            Complex z = complex(radius);
            if (std::abs(z) > 0.1) return z;
        }
    }

    /// Distinct exponents on the lattice (1/den) * Z within the exact
    /// region of the window.
    std::vector<Exponent> exponents_in_window(Orientation o,
                                              const Exponent& window,
                                              int count, long den,
                                              long span = 24) {
        std::set<Exponent> out;
        int guard = 0;
        while (static_cast<int>(out.size()) < count && ++guard < 1000) {
            Exponent e(integer(-span, span), den);
            bool inside = o == Orientation::noetherian ? e < window : e > window;
            if (inside) out.insert(e);
        }
        return {out.begin(), out.end()};
    }

    struct SeriesSpec {
        Orientation orientation = Orientation::noetherian;
        Exponent window = 12;
        int max_support = 5;
        long den = 2;
        bool nonzero = true;
        bool positive_real_leading = false;
        bool unit_degree = false;      // delta series
        bool integer_exponents = false;
        bool nonneg_exponents = false;
    };

    /// Leading coefficients sit near the unit circle and the remaining
    /// coefficients stay small, so that powers and compositions keep
    /// coefficients of order one and absolute tolerances stay meaningful.
    Complex tame_leading(bool positive_real) {
        double r = real(0.8, 1.4);
        if (positive_real) return Complex(r, 0.0);
        double phi = real(0.0, 2 * std::numbers::pi);
        return Complex(r * std::cos(phi), r * std::sin(phi));
    }

    Complex tame_tail() {
        double r = real(0.02, 0.18);
        double phi = real(0.0, 2 * std::numbers::pi);
        return Complex(r * std::cos(phi), r * std::sin(phi));
    }

    Series series(const SeriesSpec& spec) {
        int count = static_cast<int>(integer(spec.nonzero ? 1 : 0,
                                             spec.max_support));
        long den = spec.integer_exponents ? 1 : spec.den;
        std::vector<Exponent> exps;
        int guard = 0;
        while (static_cast<int>(exps.size()) < count && ++guard < 200) {
            exps = exponents_in_window(spec.orientation, spec.window, count, den);
            if (spec.nonneg_exponents) {
                std::vector<Exponent> filtered;
                for (auto& e : exps)
                    if (e >= 0) filtered.push_back(e);
                exps = filtered;
            }
        }
        std::vector<std::pair<Exponent, Complex>> terms;
        for (const auto& e : exps) terms.emplace_back(e, tame_tail());
        if (spec.unit_degree) {
            // Force degree exactly one.
            std::vector<std::pair<Exponent, Complex>> kept;
            for (auto& [e, c] : terms) {
                bool past_one = spec.orientation == Orientation::noetherian
                                    ? e > 1
                                    : e < 1;
                if (past_one) kept.emplace_back(e, c);
            }
            kept.emplace_back(Exponent(1),
                              tame_leading(spec.positive_real_leading));
            terms = kept;
        } else if (!terms.empty()) {
            std::size_t lead = spec.orientation == Orientation::noetherian
                                   ? 0
                                   : terms.size() - 1;
            terms[lead] = {terms[lead].first,
                           tame_leading(spec.positive_real_leading)};
        }
        Series s(spec.orientation, spec.window);
        for (auto& [e, c] : terms)
            s = add(s, Series::monomial(spec.orientation, spec.window, e, c));
        if (spec.nonzero && s.is_zero())
            s = Series::monomial(spec.orientation, spec.window, Exponent(0),
                                 Complex(1.0, 0.0));
        return s;
    }

    std::mt19937 gen;
};

inline bool close(const Complex& a, const Complex& b, double tol = 1e-9) {
    return std::abs(a - b) <= tol;
}

/// Tolerance scaled by the magnitude of the values compared; scalar power
/// identities reach magnitudes where absolute comparison is meaningless.
inline bool close_rel(const Complex& a, const Complex& b, double tol = 1e-9) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

/// Finite convolution oracle over explicit term lists, independent of the
/// series machinery.
inline std::map<Exponent, Complex> convolve_terms(
    const std::map<Exponent, Complex>& a, const std::map<Exponent, Complex>& b) {
    std::map<Exponent, Complex> out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
    return out;
}

} // namespace anser::testing

#endif
