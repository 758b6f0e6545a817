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

#ifndef ANSER_PROFINITE_HPP
#define ANSER_PROFINITE_HPP

#include <optional>
#include <vector>

#include "anser/errors.hpp"
#include "anser/rational.hpp"

namespace anser {

/// Residue sequence (k_n) for 1 <= n <= M with 0 <= k_n < n, consistent
/// under the projections Z_{nm} -> Z_n: k_{nm} = k_n (mod n) whenever
/// n*m <= M. Some such sequences match no integer at all.
class Pseudointeger {
public:
    Pseudointeger(long bound, std::vector<long> residues)
        : bound_(bound), residues_(std::move(residues)) {
        if (bound_ < 1) throw Error("pseudointeger: bound must be positive");
        if (static_cast<long>(residues_.size()) != bound_)
            throw Error("pseudointeger: expected one residue per modulus");
        for (long n = 1; n <= bound_; ++n) {
            long k = residues_[static_cast<std::size_t>(n - 1)];
            if (k < 0 || k >= n)
                throw Error("pseudointeger: residue out of range for modulus " +
                            std::to_string(n));
        }
        for (long n = 1; n <= bound_; ++n)
            for (long m = 1; n * m <= bound_; ++m)
                if (residue(n * m) % n != residue(n))
                    throw Error("pseudointeger: residues at " +
                                std::to_string(n * m) + " and " +
                                std::to_string(n) + " are inconsistent");
    }

    long bound() const { return bound_; }

    /// k_n for 1 <= n <= bound.
    long residue(long n) const {
        if (n < 1 || n > bound_) throw Error("pseudointeger: modulus out of range");
        return residues_[static_cast<std::size_t>(n - 1)];
    }

    const std::vector<long>& residues() const { return residues_; }

    friend bool operator==(const Pseudointeger& a, const Pseudointeger& b) {
        return a.bound_ == b.bound_ && a.residues_ == b.residues_;
    }

private:
    long bound_;
    std::vector<long> residues_;
};

/// The image of an integer: k_n = k mod n for every n up to the bound.
inline Pseudointeger embed(const BigInt& k, long bound) {
    std::vector<long> res;
    res.reserve(static_cast<std::size_t>(bound));
    for (long n = 1; n <= bound; ++n) {
        BigInt r = k % n;
        if (r < 0) r += n;
        res.push_back(r.convert_to<long>());
    }
    return Pseudointeger(bound, std::move(res));
}

namespace detail {
inline void require_same_bound(const Pseudointeger& a, const Pseudointeger& b) {
    if (a.bound() != b.bound())
        throw BoundMismatch("pseudointeger operands have different bounds");
}
} // namespace detail

inline Pseudointeger pi_add(const Pseudointeger& a, const Pseudointeger& b) {
    detail::require_same_bound(a, b);
    std::vector<long> res;
    res.reserve(static_cast<std::size_t>(a.bound()));
    for (long n = 1; n <= a.bound(); ++n)
        res.push_back((a.residue(n) + b.residue(n)) % n);
    return Pseudointeger(a.bound(), std::move(res));
}

inline Pseudointeger pi_mul(const Pseudointeger& a, const Pseudointeger& b) {
    detail::require_same_bound(a, b);
    std::vector<long> res;
    res.reserve(static_cast<std::size_t>(a.bound()));
    for (long n = 1; n <= a.bound(); ++n)
        res.push_back((a.residue(n) * b.residue(n)) % n);
    return Pseudointeger(a.bound(), std::move(res));
}

inline Pseudointeger pi_neg(const Pseudointeger& a) {
    std::vector<long> res;
    res.reserve(static_cast<std::size_t>(a.bound()));
    for (long n = 1; n <= a.bound(); ++n)
        res.push_back((n - a.residue(n)) % n);
    return Pseudointeger(a.bound(), std::move(res));
}

/// k_n = (1! + 2! + ... + n!) mod n. Consistent because n divides j! for
/// j >= n, yet no single integer has these remainders once the bound grows.
inline Pseudointeger factorial_sum_element(long bound) {
    std::vector<long> res;
    res.reserve(static_cast<std::size_t>(bound));
    for (long n = 1; n <= bound; ++n) {
        long sum = 0;
        long fact = 1;
        for (long j = 1; j <= n; ++j) {
            fact = static_cast<long>((static_cast<long long>(fact) * j) % n);
            sum = (sum + fact) % n;
        }
        res.push_back(sum % n);
    }
    return Pseudointeger(bound, std::move(res));
}

/// Reconstructs the unique residue class modulo lcm(1..bound) by the
/// Chinese remainder theorem over maximal prime powers and reports its
/// centered representative k. Every compatible sequence matches some
/// integer modulo the lcm, so recognition demands quadratic headroom:
/// the sequence counts as integral only when 4*k^2 <= lcm(1..bound),
/// i.e. the matching integer is far smaller than the resolution of the
/// residue system rather than an artifact of the finite bound.
inline std::optional<BigInt> is_integral(const Pseudointeger& a) {
    long bound = a.bound();
    // Maximal prime powers <= bound form a coprime system with lcm(1..bound).
    std::vector<long> moduli;
    for (long p = 2; p <= bound; ++p) {
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (!prime) continue;
        long pk = p;
        while (pk * p <= bound) pk *= p;
        moduli.push_back(pk);
    }
    BigInt value = 0;
    BigInt lcm = 1;
    for (long m : moduli) {
        // Solve value' = value (mod lcm), value' = a.residue(m) (mod m).
        BigInt target = a.residue(m);
        BigInt step = lcm;
        BigInt v = value;
        while (v % m != target % m) v += step;
        value = v;
        lcm *= m;
    }
    BigInt candidate = value;
    if (candidate > lcm / 2) candidate -= lcm;
    for (long n = 1; n <= bound; ++n) {
        BigInt r = candidate % n;
        if (r < 0) r += n;
        if (r != a.residue(n)) return std::nullopt;
    }
    if (4 * candidate * candidate > lcm) return std::nullopt;
    return candidate;
}

} // namespace anser

#endif
