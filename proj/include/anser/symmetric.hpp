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

#ifndef ANSER_SYMMETRIC_HPP
#define ANSER_SYMMETRIC_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "anser/power.hpp"
#include "anser/series.hpp"

namespace anser {

// Multivariate series are realized recursively: a series in x1 whose
// coefficients are series in x2, and so on down to complex numbers.
// The nesting depth is a template parameter; the public symmetric API
// dispatches over the supported variable counts.

inline constexpr int max_nvars = 4;

template <int N>
struct NestedT {
    using type = BasicSeries<typename NestedT<N - 1>::type>;
};
template <>
struct NestedT<0> {
    using type = Complex;
};
template <int N>
using Nested = typename NestedT<N>::type;

template <int N>
Nested<N> nested_zero(const Exponent& window) {
    if constexpr (N == 0)
        return Complex(0.0, 0.0);
    else
        return Nested<N>(Orientation::noetherian, window);
}

template <int N>
Nested<N> nested_const(const Exponent& window, const Complex& v) {
    if constexpr (N == 0) {
        return v;
    } else {
        return Nested<N>::constant(Orientation::noetherian, window,
                                   nested_const<N - 1>(window, v));
    }
}

/// x1^{alpha[0]} * ... * xN^{alpha[N-1]} * v with the same window bound at
/// every level.
template <int N>
Nested<N> nested_monomial(const Exponent& window, const Exponent* alpha,
                          const Complex& v) {
    if constexpr (N == 0) {
        return v;
    } else {
        return Nested<N>::monomial(Orientation::noetherian, window, alpha[0],
                                   nested_monomial<N - 1>(window, alpha + 1, v));
    }
}

template <int N, class F>
void nested_for_each(const Nested<N>& s, std::vector<Exponent>& prefix, F&& f) {
    if constexpr (N == 0) {
        f(prefix, s);
    } else {
        for (const auto& [e, c] : s.terms()) {
            prefix.push_back(e);
            nested_for_each<N - 1>(c, prefix, f);
            prefix.pop_back();
        }
    }
}

/// True when the windows at every level certify exactness of all monomials
/// of total degree below `needed` with nonnegative exponents.
template <int N>
bool nested_window_covers(const Nested<N>& s, const Exponent& needed) {
    if constexpr (N == 0) {
        return true;
    } else {
        if (!(s.window() >= needed)) return false;
        for (const auto& [e, c] : s.terms())
            if (!nested_window_covers<N - 1>(c, needed - e)) return false;
        return true;
    }
}

/// Nonincreasing vector of positive rational exponents; indexes the bases
/// of symmetric series. The empty partition is the unit.
class RealPartition {
public:
    RealPartition() = default;

    explicit RealPartition(std::vector<Exponent> parts)
        : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (!(parts_[i] > 0))
                throw InvalidPartition("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InvalidPartition("partition parts must be nonincreasing");
        }
    }

    const std::vector<Exponent>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }

    Exponent weight() const {
        Exponent w = 0;
        for (const auto& p : parts_) w += p;
        return w;
    }

    bool is_integer() const {
        for (const auto& p : parts_)
            if (!exp_is_integer(p)) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += exp_to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const RealPartition& a, const RealPartition& b) {
        return a.parts_ == b.parts_;
    }

    /// Listing order: by weight, then reverse lexicographic within a weight
    /// ((n) first, (1,...,1) last). "a < b" means a is listed before b.
    friend bool operator<(const RealPartition& a, const RealPartition& b) {
        Exponent wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        std::size_t n = std::max(a.length(), b.length());
        for (std::size_t i = 0; i < n; ++i) {
            Exponent pa = i < a.length() ? a.parts_[i] : Exponent(0);
            Exponent pb = i < b.length() ? b.parts_[i] : Exponent(0);
            if (pa != pb) return pa > pb;
        }
        return false;
    }

private:
    std::vector<Exponent> parts_;
};

/// True when gamma occurs strictly after beta in the reverse lexicographic
/// listing of its weight class.
inline bool reverse_lex_after(const RealPartition& beta,
                              const RealPartition& gamma) {
    return beta < gamma;
}

/// Symmetric series in a fixed number of variables, stored as coefficients
/// on the monomial basis m_beta. Partitions of weight below the cutoff are
/// exact (a graded window).
class SymSeries {
public:
    SymSeries(int nvars, Exponent cutoff)
        : nvars_(nvars), cutoff_(std::move(cutoff)) {
        if (nvars_ < 1 || nvars_ > max_nvars)
            throw VariableMismatch("nvars must lie between 1 and " +
                                   std::to_string(max_nvars));
    }

    static SymSeries make(int nvars, const Exponent& cutoff,
                          const std::vector<std::pair<RealPartition, Complex>>& terms) {
        SymSeries s(nvars, cutoff);
        for (const auto& [beta, c] : terms) {
            if (static_cast<int>(beta.length()) > nvars)
                throw TooFewVariables("partition " + beta.str() + " needs " +
                                      std::to_string(beta.length()) + " variables");
            if (!(beta.weight() < cutoff))
                throw WindowViolation("partition " + beta.str() +
                                      " lies beyond the cutoff");
            if (s.coeffs_.count(beta))
                throw InvalidPartition("duplicate partition " + beta.str());
            if (std::abs(c) > config::tolerance()) s.coeffs_.emplace(beta, c);
        }
        return s;
    }

    static SymSeries constant(int nvars, const Exponent& cutoff,
                              const Complex& c) {
        return make(nvars, cutoff, {{RealPartition(), c}});
    }

    int nvars() const { return nvars_; }
    const Exponent& cutoff() const { return cutoff_; }
    const std::map<RealPartition, Complex>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Complex coefficient_at(const RealPartition& beta) const {
        if (!(beta.weight() < cutoff_))
            throw PrecisionExceeded("partition " + beta.str() +
                                    " lies beyond the cutoff");
        auto it = coeffs_.find(beta);
        return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
    }

    /// Internal builder: prunes zeros, drops weight >= cutoff, checks length.
    static SymSeries normalized(int nvars, const Exponent& cutoff,
                              std::map<RealPartition, Complex> coeffs) {
        SymSeries s(nvars, cutoff);
        for (auto& [beta, c] : coeffs) {
            if (static_cast<int>(beta.length()) > nvars) continue;
            if (!(beta.weight() < cutoff)) continue;
            if (std::abs(c) > config::tolerance())
                s.coeffs_.emplace(beta, c);
        }
        return s;
    }

private:
    int nvars_;
    Exponent cutoff_;
    std::map<RealPartition, Complex> coeffs_;
};

inline SymSeries sym_add(const SymSeries& f, const SymSeries& g) {
    if (f.nvars() != g.nvars())
        throw VariableMismatch("sym_add: different variable counts");
    Exponent cutoff = std::min(f.cutoff(), g.cutoff());
    std::map<RealPartition, Complex> out = f.coeffs();
    for (const auto& [b, c] : g.coeffs()) out[b] += c;
    return SymSeries::normalized(f.nvars(), cutoff, std::move(out));
}

inline SymSeries sym_scale(const Complex& z, const SymSeries& f) {
    std::map<RealPartition, Complex> out;
    for (const auto& [b, c] : f.coeffs()) out.emplace(b, c * z);
    return SymSeries::normalized(f.nvars(), f.cutoff(), std::move(out));
}

inline SymSeries sym_sub(const SymSeries& f, const SymSeries& g) {
    return sym_add(f, sym_scale(Complex(-1.0, 0.0), g));
}

inline bool sym_approx_eq(const SymSeries& f, const SymSeries& g, double tol) {
    if (f.nvars() != g.nvars())
        throw VariableMismatch("sym_approx_eq: different variable counts");
    SymSeries d = sym_sub(f, g);
    for (const auto& [b, c] : d.coeffs())
        if (std::abs(c) > tol) return false;
    return true;
}

/// All distinct permutations of beta padded with zeros into nvars slots.
inline std::vector<std::vector<Exponent>> monomial_expand_terms(
    const RealPartition& beta, int nvars) {
    if (static_cast<int>(beta.length()) > nvars)
        throw TooFewVariables("partition " + beta.str() + " needs " +
                              std::to_string(beta.length()) + " variables");
    std::vector<Exponent> slots(static_cast<std::size_t>(nvars), Exponent(0));
    std::copy(beta.parts().begin(), beta.parts().end(), slots.begin());
    std::sort(slots.begin(), slots.end());
    std::vector<std::vector<Exponent>> out;
    do {
        out.push_back(slots);
    } while (std::next_permutation(slots.begin(), slots.end()));
    return out;
}

/// m_beta as a nested series: the sum over distinct permutations, with the
/// same window bound at every level.
template <int N>
Nested<N> monomial_expand(const RealPartition& beta, const Exponent& window) {
    Nested<N> acc = nested_zero<N>(window);
    for (const auto& alpha : monomial_expand_terms(beta, N))
        acc = add(acc, nested_monomial<N>(window, alpha.data(), Complex(1.0, 0.0)));
    return acc;
}

template <int N>
Nested<N> sym_to_nested(const SymSeries& f, const Exponent& window) {
    Nested<N> acc = nested_zero<N>(window);
    for (const auto& [beta, c] : f.coeffs())
        acc = add(acc, scalar_mul(c, monomial_expand<N>(beta, window)));
    return acc;
}

/// Result of re-collecting a nested series into the monomial basis.
/// symmetry_defect is the largest deviation between a monomial coefficient
/// and that of its sorted representative; offgrid_mass is the largest
/// coefficient seen on monomials with a negative exponent, which have no
/// home in the nonnegative symmetric algebra.
struct CollectedSym {
    SymSeries series;
    double symmetry_defect = 0.0;
    double offgrid_mass = 0.0;
};

template <int N>
CollectedSym collect_symmetric(const Nested<N>& s, const Exponent& cutoff) {
    if (!nested_window_covers<N>(s, cutoff))
        throw PrecisionExceeded(
            "collect: windows do not cover the graded cutoff region");
    std::map<std::vector<Exponent>, Complex> monomials;
    std::vector<Exponent> prefix;
    nested_for_each<N>(s, prefix, [&](const std::vector<Exponent>& alpha,
                                      const Complex& c) {
        monomials[alpha] += c;
    });

    CollectedSym out{SymSeries(N, cutoff), 0.0, 0.0};
    std::map<RealPartition, Complex> coeffs;
    for (const auto& [alpha, c] : monomials) {
        bool nonneg = true;
        Exponent weight = 0;
        for (const auto& e : alpha) {
            if (e < 0) nonneg = false;
            weight += e;
        }
        if (!nonneg) {
            out.offgrid_mass = std::max(out.offgrid_mass, std::abs(c));
            continue;
        }
        if (!(weight < cutoff)) continue;
        std::vector<Exponent> sorted = alpha;
        std::sort(sorted.begin(), sorted.end(), std::greater<Exponent>());
        auto canon = monomials.find(sorted);
        Complex cc = canon == monomials.end() ? Complex(0.0, 0.0) : canon->second;
        out.symmetry_defect = std::max(out.symmetry_defect, std::abs(c - cc));
        if (sorted == alpha) {
            std::vector<Exponent> parts;
            for (const auto& e : sorted)
                if (e > 0) parts.push_back(e);
            coeffs[RealPartition(std::move(parts))] += c;
        }
    }
    out.series = SymSeries::normalized(N, cutoff, std::move(coeffs));
    return out;
}

namespace detail {

template <class F>
auto dispatch_nvars(int nvars, F&& f) {
    switch (nvars) {
        case 1: return f(std::integral_constant<int, 1>{});
        case 2: return f(std::integral_constant<int, 2>{});
        case 3: return f(std::integral_constant<int, 3>{});
        case 4: return f(std::integral_constant<int, 4>{});
        default:
            throw VariableMismatch("nvars must lie between 1 and " +
                                   std::to_string(max_nvars));
    }
}

/// Integer partitions of n with at most max_len parts, parts bounded by
/// max_part, in the listing order.
inline void integer_partitions_rec(long n, long max_part, int max_len,
                                   std::vector<Exponent>& current,
                                   std::vector<RealPartition>& out) {
    if (n == 0) {
        out.push_back(RealPartition(current));
        return;
    }
    if (max_len == 0) return;
    for (long p = std::min<long>(n, max_part); p >= 1; --p) {
        current.push_back(Exponent(p));
        integer_partitions_rec(n - p, p, max_len - 1, current, out);
        current.pop_back();
    }
}

inline std::vector<RealPartition> integer_partitions(long n, int max_len) {
    std::vector<RealPartition> out;
    std::vector<Exponent> current;
    integer_partitions_rec(n, n, max_len, current, out);
    return out;
}

} // namespace detail

/// Multiplication via monomial expansion: expand both factors into nested
/// series in nvars variables, convolve, re-collect into the monomial basis.
inline SymSeries sym_mul(const SymSeries& f, const SymSeries& g) {
    if (f.nvars() != g.nvars())
        throw VariableMismatch("sym_mul: different variable counts");
    Exponent cutoff = std::min(f.cutoff(), g.cutoff());
    return detail::dispatch_nvars(f.nvars(), [&](auto nc) {
        constexpr int N = decltype(nc)::value;
        Nested<N> a = sym_to_nested<N>(f, cutoff);
        Nested<N> b = sym_to_nested<N>(g, cutoff);
        return collect_symmetric<N>(mul(a, b), cutoff).series;
    });
}

/// e_n: the monomial series of the all-ones partition (zero when n > nvars,
/// or when the graded window cannot see weight n).
inline SymSeries elementary(int n, int nvars, const Exponent& cutoff) {
    if (n < 1) throw Error("elementary: index must be >= 1");
    SymSeries s(nvars, cutoff);
    if (n > nvars || !(Exponent(n) < cutoff)) return s;
    std::vector<Exponent> ones(static_cast<std::size_t>(n), Exponent(1));
    return SymSeries::make(nvars, cutoff, {{RealPartition(ones), Complex(1.0, 0.0)}});
}

/// h_n: the sum of every monomial series of weight n.
inline SymSeries complete(int n, int nvars, const Exponent& cutoff) {
    if (n < 1) throw Error("complete: index must be >= 1");
    SymSeries s(nvars, cutoff);
    if (!(Exponent(n) < cutoff)) return s;
    std::vector<std::pair<RealPartition, Complex>> terms;
    for (const auto& lam : detail::integer_partitions(n, nvars))
        terms.emplace_back(lam, Complex(1.0, 0.0));
    return SymSeries::make(nvars, cutoff, terms);
}

/// p_n: the single-part monomial series m_{(n)}.
inline SymSeries powersum(int n, int nvars, const Exponent& cutoff) {
    if (n < 1) throw Error("powersum: index must be >= 1");
    SymSeries s(nvars, cutoff);
    if (!(Exponent(n) < cutoff)) return s;
    return SymSeries::make(nvars, cutoff,
                           {{RealPartition({Exponent(n)}), Complex(1.0, 0.0)}});
}

enum class SymFamily { elementary, complete, powersum };

namespace detail {

/// Monomial-basis terms of the k-th generator of a family, independent of
/// any cutoff (these are finite polynomials).
inline std::vector<std::pair<RealPartition, Complex>> generator_terms(
    SymFamily family, int k, int nvars) {
    std::vector<std::pair<RealPartition, Complex>> terms;
    switch (family) {
        case SymFamily::elementary: {
            if (k <= nvars) {
                std::vector<Exponent> ones(static_cast<std::size_t>(k), Exponent(1));
                terms.emplace_back(RealPartition(ones), Complex(1.0, 0.0));
            }
            break;
        }
        case SymFamily::complete: {
            for (const auto& lam : integer_partitions(k, nvars))
                terms.emplace_back(lam, Complex(1.0, 0.0));
            break;
        }
        case SymFamily::powersum: {
            terms.emplace_back(RealPartition({Exponent(k)}), Complex(1.0, 0.0));
            break;
        }
    }
    return terms;
}

template <int N>
Nested<N> generator_nested(SymFamily family, int k, const Exponent& window) {
    Nested<N> acc = nested_zero<N>(window);
    for (const auto& [beta, c] : generator_terms(family, k, N))
        acc = add(acc, scalar_mul(c, monomial_expand<N>(beta, window)));
    return acc;
}

} // namespace detail

/// prod_k g_k ^ {beta_k - beta_{k+1}} in the nested representation, with
/// g_k the k-th generator of the family. The exponent differences are
/// nonnegative since beta is nonincreasing.
template <int N>
Nested<N> basis_product_nested(SymFamily family, const RealPartition& beta,
                               BranchIndex n, const Exponent& window) {
    Nested<N> acc = nested_const<N>(window, Complex(1.0, 0.0));
    for (std::size_t k = 0; k < beta.length(); ++k) {
        Exponent next = k + 1 < beta.length() ? beta.parts()[k + 1] : Exponent(0);
        Exponent t = beta.parts()[k] - next;
        if (t == 0) continue;
        Nested<N> gen =
            detail::generator_nested<N>(family, static_cast<int>(k) + 1, window);
        acc = mul(acc, pow(gen, t, n));
    }
    return acc;
}

/// Collected form of the basis product, with symmetry diagnostics. Windows
/// widen automatically until they cover the graded cutoff region.
inline CollectedSym basis_product_full(SymFamily family, const RealPartition& beta,
                                       BranchIndex n, int nvars,
                                       const Exponent& cutoff) {
    return detail::dispatch_nvars(nvars, [&](auto nc) {
        constexpr int N = decltype(nc)::value;
        Exponent window = cutoff + 2;
        for (int attempt = 0;; ++attempt) {
            try {
                Nested<N> prod = basis_product_nested<N>(family, beta, n, window);
                return collect_symmetric<N>(prod, cutoff);
            } catch (const PrecisionExceeded&) {
                if (attempt >= 5) throw;
                window *= 2;
            }
        }
    });
}

inline SymSeries basis_product(SymFamily family, const RealPartition& beta,
                               BranchIndex n, int nvars, const Exponent& cutoff) {
    return basis_product_full(family, beta, n, nvars, cutoff).series;
}

/// p_lambda = prod_i p_{lambda_i} for an integer partition, as a SymSeries.
inline SymSeries powersum_product(const RealPartition& lambda, int nvars,
                                  const Exponent& cutoff) {
    SymSeries acc = SymSeries::constant(nvars, cutoff, Complex(1.0, 0.0));
    for (const auto& part : lambda.parts())
        acc = sym_mul(acc, powersum(static_cast<int>(exp_to_long(part)), nvars,
                                    cutoff));
    return acc;
}

/// Expansion of f over products of integer-indexed power sums with at most
/// nvars parts, solved weight by weight against the triangular
/// p-to-monomial matrix. Fails on content outside that span.
inline std::map<RealPartition, Complex> to_p_basis(const SymSeries& f) {
    std::map<RealPartition, Complex> result;
    // Group coefficients by weight; only integer weights are expressible.
    std::map<long, std::map<RealPartition, Complex>> slices;
    for (const auto& [beta, c] : f.coeffs()) {
        if (!beta.is_integer())
            throw UnsupportedBasis("to_p_basis: non-integer partition " +
                                   beta.str());
        slices[exp_to_long(beta.weight())][beta] = c;
    }
    for (auto& [w, residual] : slices) {
        if (w == 0) {
            result[RealPartition()] += residual.begin()->second;
            continue;
        }
        auto lambdas = detail::integer_partitions(w, f.nvars());
        // The p-to-m matrix is triangular against the listing order with
        // nonzero diagonal; eliminate from the last partition upward.
        std::vector<std::pair<RealPartition, SymSeries>> table;
        table.reserve(lambdas.size());
        for (const auto& lam : lambdas)
            table.emplace_back(lam, powersum_product(lam, f.nvars(), f.cutoff()));
        for (auto it = table.rbegin(); it != table.rend(); ++it) {
            const auto& [lam, plam] = *it;
            Complex diag = plam.coefficient_at(lam);
            if (std::abs(diag) <= config::tolerance())
                throw UnsupportedBasis("to_p_basis: degenerate diagonal at " +
                                       lam.str());
            Complex c = residual.count(lam) ? residual[lam] : Complex(0.0, 0.0);
            Complex u = c / diag;
            if (std::abs(u) <= config::tolerance()) continue;
            result[lam] += u;
            for (const auto& [mu, pc] : plam.coeffs()) residual[mu] -= u * pc;
        }
        for (const auto& [mu, c] : residual)
            if (std::abs(c) > 1e-6)
                throw UnsupportedBasis("to_p_basis: residual content at " +
                                       mu.str());
    }
    return result;
}

/// Rebuild a SymSeries from p-basis coordinates.
inline SymSeries from_p_basis(const std::map<RealPartition, Complex>& coords,
                              int nvars, const Exponent& cutoff) {
    SymSeries acc(nvars, cutoff);
    for (const auto& [lam, c] : coords) {
        if (lam.length() == 0) {
            acc = sym_add(acc, SymSeries::constant(nvars, cutoff, c));
            continue;
        }
        acc = sym_add(acc, sym_scale(c, powersum_product(lam, nvars, cutoff)));
    }
    return acc;
}

/// The involution exchanging elementary and complete symmetric series,
/// acting on power sums by p_lambda -> (-1)^{|lambda| - l(lambda)} p_lambda.
/// Defined on the span of integer-indexed power-sum products.
inline SymSeries omega(const SymSeries& f) {
    auto coords = to_p_basis(f);
    std::map<RealPartition, Complex> flipped;
    for (const auto& [lam, c] : coords) {
        long sign_exp = 0;
        for (const auto& part : lam.parts()) sign_exp += exp_to_long(part) - 1;
        double sign = sign_exp % 2 == 0 ? 1.0 : -1.0;
        flipped[lam] = c * sign;
    }
    return from_p_basis(flipped, f.nvars(), f.cutoff());
}

/// Checks the expansion basis_product(family, beta) = m_beta + terms on
/// partitions strictly later in the reverse lexicographic listing.
inline bool triangularity_check(SymFamily family, const RealPartition& beta,
                                int nvars, const Exponent& cutoff) {
    if (!beta.is_integer())
        throw InvalidPartition("triangularity_check: integer partition required");
    SymSeries p = basis_product(family, beta, 0, nvars, cutoff);
    bool saw_diagonal = false;
    for (const auto& [gamma, c] : p.coeffs()) {
        if (gamma == beta) {
            if (std::abs(c - Complex(1.0, 0.0)) > 1e-6) return false;
            saw_diagonal = true;
        } else if (!reverse_lex_after(beta, gamma)) {
            return false;
        }
    }
    return saw_diagonal;
}

/// Multiplicative inverse; exists exactly when the constant term does not
/// vanish.
inline SymSeries sym_invert(const SymSeries& f) {
    Complex c0 = f.coeffs().count(RealPartition())
                     ? f.coeffs().at(RealPartition())
                     : Complex(0.0, 0.0);
    if (std::abs(c0) <= config::tolerance())
        throw DivisionByZero("sym_invert: constant term vanishes");
    SymSeries u = sym_sub(f, SymSeries::constant(f.nvars(), f.cutoff(), c0));
    Complex scale = Complex(-1.0, 0.0) / c0;
    SymSeries acc = SymSeries::constant(f.nvars(), f.cutoff(), Complex(1.0, 0.0));
    SymSeries term = acc;
    while (true) {
        term = sym_scale(scale, sym_mul(term, u));
        if (term.is_zero()) break;
        acc = sym_add(acc, term);
    }
    return sym_scale(Complex(1.0, 0.0) / c0, acc);
}

} // namespace anser

#endif
