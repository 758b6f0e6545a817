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

#include "support.hpp"

using namespace anser;
using anser::testing::Rng;
using anser::testing::close;

namespace {

const Complex one(1.0, 0.0);

Series noeth(std::vector<std::pair<Exponent, Complex>> terms,
             Exponent window = 12) {
    return Series::make(Orientation::noetherian, terms, window);
}

Rng::SeriesSpec random_spec(Rng& rng, int max_support = 4) {
    Rng::SeriesSpec spec;
    spec.orientation =
        rng.flip() ? Orientation::noetherian : Orientation::artinian;
    spec.window = spec.orientation == Orientation::noetherian ? Exponent(10)
                                                              : Exponent(-10);
    spec.max_support = max_support;
    return spec;
}

} // namespace

TEST_CASE("argument of a series") {
    CHECK(arg_of(noeth({{Exponent(1), Complex(-1, 0)},
                        {Exponent(2), one}})) ==
          Catch::Approx(std::numbers::pi));
    CHECK(arg_of(noeth({{Exponent(1, 2), Complex(2, 0)}})) == 0.0);
    CHECK_THROWS_AS(arg_of(Series(Orientation::noetherian, Exponent(2))),
                    UndefinedArgument);
}

TEST_CASE("binomial coefficients of (1+x)^(1/2) are exact") {
    Series f = noeth({{Exponent(0), one}, {Exponent(1), one}}, Exponent(12));
    Series r = pow(f, Exponent(1, 2), 0);
    Exponent kfact = 1;
    for (unsigned k = 0; k <= 10; ++k) {
        if (k > 0) kfact *= k;
        Exponent expected = falling_factorial(Exponent(1, 2), k) / kfact;
        CHECK(r.coefficient_at(Exponent(k)).real() ==
              exp_to_double(expected));
        CHECK(r.coefficient_at(Exponent(k)).imag() == 0.0);
    }
}

TEST_CASE("powers of monomials and branch scaling") {
    Series sq = noeth({{Exponent(2), one}}, Exponent(12));
    Series p = pow(sq, Exponent(5, 3), 0);
    CHECK(p.terms().size() == 1);
    CHECK(*p.degree() == Exponent(10, 3));

    Series fourx = noeth({{Exponent(1), Complex(4, 0)}}, Exponent(12));
    Series q = pow(fourx, Exponent(1, 2), 1);
    CHECK(*q.degree() == Exponent(1, 2));
    CHECK(close(q.leading_coeff(), Complex(-2, 0)));

    CHECK_THROWS_AS(pow(Series(Orientation::noetherian, Exponent(2)),
                        Exponent(-1), 0),
                    UndefinedPower);
    CHECK(pow(Series(Orientation::noetherian, Exponent(2)), Exponent(3), 0)
              .is_zero());
}

TEST_CASE("multiset oracle agrees with the binomial method") {
    Series f = noeth({{Exponent(0), one}, {Exponent(1), one}}, Exponent(6));
    CHECK(approx_eq(pow(f, Exponent(1, 2), 0),
                    pow_multiset_oracle(f, Exponent(1, 2), 0), 1e-9));

    // Constants: only the empty multiset contributes.
    Series c = noeth({{Exponent(0), Complex(2, 1)}}, Exponent(4));
    Series co = pow_multiset_oracle(c, Exponent(1, 3), 2);
    CHECK(co.terms().size() == 1);
    CHECK(close(co.leading_coeff(), cpow(Complex(2, 1), Exponent(1, 3), 2)));

    // Integer powers against plain multiplication.
    Series g = noeth({{Exponent(0), one}, {Exponent(1), one}, {Exponent(2), one}},
                     Exponent(6));
    CHECK(approx_eq(pow_multiset_oracle(g, Exponent(2), 0), mul(g, g), 1e-9));

    Rng rng(8201);
    for (int trial = 0; trial < 60; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng, 5);
        spec.window = spec.orientation == Orientation::noetherian
                          ? Exponent(6)
                          : Exponent(-6);
        Series h = rng.series(spec);
        Exponent t = rng.rational();
        BranchIndex n = rng.integer(-2, 2);
        CHECK(approx_eq(pow(h, t, n), pow_multiset_oracle(h, t, n), 1e-6));
    }
}

TEST_CASE("exponent homomorphism for series powers") {
    Rng rng(8202);
    for (int trial = 0; trial < 100; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng);
        Series g = rng.series(spec);
        Exponent s = rng.rational(4, 3), t = rng.rational(4, 3);
        BranchIndex n = rng.integer(-2, 2);
        CHECK(approx_eq(mul(pow(g, s, n), pow(g, t, n)), pow(g, s + t, n),
                        1e-5));
    }
}

TEST_CASE("special exponents") {
    Rng rng(8203);
    for (int trial = 0; trial < 50; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng);
        Series g = rng.series(spec);
        BranchIndex n = rng.integer(-2, 2);
        CHECK(approx_eq(pow(g, Exponent(1), n), g, 1e-9));
        Series p0 = pow(g, Exponent(0), n);
        CHECK(p0.terms().size() == 1);
        CHECK(close(p0.leading_coeff(), one, 1e-9));
        CHECK(approx_eq(pow(g, Exponent(-1), n), invert(g), 1e-6));
    }
}

TEST_CASE("degree law for powers") {
    Rng rng(8204);
    for (int trial = 0; trial < 100; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng);
        Series g = rng.series(spec);
        Exponent t = rng.nonzero_rational();
        CHECK(*pow(g, t, 0).degree() == t * *g.degree());
    }
}

TEST_CASE("duality commutes with exponentiation") {
    Rng rng(8205);
    for (int trial = 0; trial < 100; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng);
        Series g = rng.series(spec);
        Exponent t = rng.rational(4, 3);
        BranchIndex n = rng.integer(-2, 2);
        CHECK(approx_eq(dualize(pow(g, t, n)), pow(dualize(g), t, n), 1e-6));
    }
}

TEST_CASE("branch quotient of series powers has modulus one") {
    Rng rng(8206);
    for (int trial = 0; trial < 50; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng);
        Series g = rng.series(spec);
        Exponent t = rng.rational(4, 3);
        BranchIndex n = rng.integer(-2, 2), m = rng.integer(-2, 2);
        Series quotient = mul(pow(g, t, n), invert(pow(g, t, m)));
        CHECK(quotient.terms().size() == 1);
        CHECK(*quotient.degree() == 0);
        CHECK(std::abs(quotient.leading_coeff()) == Catch::Approx(1.0).margin(1e-7));
    }
}

TEST_CASE("product branch rule for series") {
    Series a = noeth({{Exponent(0), one}, {Exponent(1), one}});
    Series b = noeth({{Exponent(0), one}, {Exponent(1), Complex(2, 0)}});
    CHECK(pow_product_branch(a, b, 0, 0) == 0);

    Series ix = noeth({{Exponent(1), Complex(0, 1)}});
    CHECK(pow_product_branch(ix, ix, 1, 2) == 3);

    Series neg = noeth({{Exponent(0), Complex(-1, 0)}, {Exponent(1), one}},
                       Exponent(4));
    CHECK(pow_product_branch(neg, neg, 0, 0) == 1);
    Series lhs = pow(mul(neg, neg), Exponent(1, 2), 1);
    Series rhs = mul(pow(neg, Exponent(1, 2), 0), pow(neg, Exponent(1, 2), 0));
    CHECK(approx_eq(lhs, rhs, 1e-9));

    CHECK_THROWS_AS(
        pow_product_branch(Series(Orientation::noetherian, Exponent(2)), a, 0, 0),
        UndefinedArgument);

    Rng rng(8207);
    for (int trial = 0; trial < 100; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng, 3);
        Series f = rng.series(spec), g = rng.series(spec);
        Exponent t = rng.rational(4, 3);
        BranchIndex j = rng.integer(-2, 2), k = rng.integer(-2, 2);
        BranchIndex n = pow_product_branch(f, g, j, k);
        CHECK(approx_eq(pow(mul(f, g), t, n), mul(pow(f, t, j), pow(g, t, k)),
                        1e-5));
    }
}

TEST_CASE("iterated power branch rule for series") {
    Series a = noeth({{Exponent(0), one}, {Exponent(1), one}});
    CHECK(pow_iterate_branch(a, Exponent(7, 3), 0) == 0);

    Series neg = noeth({{Exponent(0), Complex(-1, 0)}, {Exponent(1), one}},
                       Exponent(3));
    CHECK(pow_iterate_branch(neg, Exponent(3), 0) == 1);
    CHECK(pow_iterate_branch(neg, Exponent(1, 2), 0) == 0);
    {
        BranchIndex j = pow_iterate_branch(neg, Exponent(3), 0);
        Series lhs = pow(neg, Exponent(1), 0);
        Series rhs = pow(pow(neg, Exponent(3), 0), Exponent(1, 3), j);
        CHECK(approx_eq(lhs, rhs, 1e-9));
    }

    Rng rng(8208);
    for (int trial = 0; trial < 100; ++trial) {
        Rng::SeriesSpec spec = random_spec(rng, 3);
        Series f = rng.series(spec);
        Exponent s = rng.nonzero_rational(4, 3), t = rng.rational(4, 3);
        BranchIndex n = rng.integer(-2, 2);
        BranchIndex j = pow_iterate_branch(f, s, n);
        CHECK(approx_eq(pow(f, s * t, n), pow(pow(f, s, n), t, j), 1e-5));
    }
}

TEST_CASE("powers vary continuously away from the positive real axis") {
    Rng rng(8209);
    for (int trial = 0; trial < 40; ++trial) {
        // Moderate coefficient moduli keep the sensitivity factor small.
        Exponent window(6);
        auto coeff = [&](double lo, double hi) {
            double r = rng.real(0.5, 2.0);
            double phi = rng.real(lo, hi);
            return Complex(r * std::cos(phi), r * std::sin(phi));
        };
        std::vector<std::pair<Exponent, Complex>> terms;
        Exponent d(rng.integer(-2, 2), 2);
        terms.emplace_back(d, coeff(0.5, two_pi - 0.5));
        for (int j = 1; j <= 2; ++j)
            terms.emplace_back(d + Exponent(j, 2), coeff(0.0, two_pi));
        Series g = Series::make(Orientation::noetherian, terms, window);
        Exponent t = rng.rational(3, 2);
        BranchIndex n = rng.integer(-1, 1);
        double delta = 1e-6;
        Series g2 = add(g, Series::monomial(g.orientation(), g.window(),
                                            *g.degree(), Complex(delta, 0)));
        Series p1 = pow(g, t, n), p2 = pow(g2, t, n);
        double diff = coeff_sup_abs(sub(p1, p2));
        double scale = std::max(1.0, coeff_sup_abs(p1));
        CHECK(diff <= 100 * delta * scale);
    }
}
