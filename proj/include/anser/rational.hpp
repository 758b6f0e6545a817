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

#ifndef ANSER_RATIONAL_HPP
#define ANSER_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "anser/errors.hpp"

namespace anser {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number used as a series exponent. Kept in lowest terms
/// with positive denominator by the backend; order and arithmetic are exact.
using Exponent = boost::multiprecision::cpp_rational;

inline bool exp_is_integer(const Exponent& q) { return denominator(q) == 1; }

inline double exp_to_double(const Exponent& q) { return q.convert_to<double>(); }

/// Largest integer <= q.
inline BigInt exp_floor(const Exponent& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

inline long exp_to_long(const Exponent& q) {
    if (!exp_is_integer(q)) throw Error("expected an integer, got " + q.str());
    return numerator(q).convert_to<long>();
}

/// Renders "p" for integers and "p/q" otherwise.
inline std::string exp_to_string(const Exponent& q) {
    if (exp_is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

/// Decimal integer from a digit string with optional sign. Leading zeros
/// are stripped so the backend never sees an octal-looking prefix.
inline BigInt bigint_from_decimal(std::string text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        text.erase(0, 1);
    }
    if (text.empty()) throw Error("empty integer literal");
    std::size_t first = text.find_first_not_of('0');
    if (first == std::string::npos)
        text = "0";
    else
        text.erase(0, first);
    for (char c : text)
        if (c < '0' || c > '9')
            throw Error(std::string("bad digit '") + c + "' in integer literal");
    BigInt v(text);
    return negative ? -v : v;
}

} // namespace detail

/// Parses "p", "p/q" or a decimal literal such as "0.25" (read exactly as
/// written, e.g. 0.1 -> 1/10; never converted through binary floating point).
inline Exponent exp_from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = detail::bigint_from_decimal(text.substr(0, slash));
        BigInt den = detail::bigint_from_decimal(text.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + text + "'");
        return Exponent(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        BigInt num = detail::bigint_from_decimal(digits.empty() ? "0" : digits);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Exponent(num, den);
    }
    return Exponent(detail::bigint_from_decimal(text));
}

} // namespace anser

#endif
