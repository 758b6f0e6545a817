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

#ifndef ANSER_SERIALIZE_HPP
#define ANSER_SERIALIZE_HPP

#include <json.hpp>

#include "anser/profinite.hpp"
#include "anser/series.hpp"
#include "anser/symmetric.hpp"

namespace anser {

using Json = nlohmann::ordered_json;

// Series wire format: exponents as exact fraction strings, terms ascending.
// {"orientation": "noetherian", "window": "p/q",
//  "terms": [{"exp": "p/q", "re": 1.0, "im": 0.0}, ...]}

inline Json series_to_json(const Series& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json{{"exp", exp_to_string(e)},
                             {"re", c.real()},
                             {"im", c.imag()}});
    return Json{{"orientation", orientation_name(f.orientation())},
                {"window", exp_to_string(f.window())},
                {"terms", std::move(terms)}};
}

inline Series series_from_json(const Json& j) {
    std::string o = j.at("orientation").get<std::string>();
    if (o != "noetherian" && o != "artinian")
        throw Error("series_from_json: unknown orientation '" + o + "'");
    Orientation orient =
        o == "noetherian" ? Orientation::noetherian : Orientation::artinian;
    Exponent window = exp_from_string(j.at("window").get<std::string>());
    std::vector<std::pair<Exponent, Complex>> terms;
    for (const auto& t : j.at("terms")) {
        Exponent e = exp_from_string(t.at("exp").get<std::string>());
        Complex c(t.at("re").get<double>(), t.at("im").get<double>());
        if (!scalar_is_finite(c))
            throw InvalidScalar("series_from_json: non-finite coefficient");
        terms.emplace_back(std::move(e), c);
    }
    return Series::make(orient, terms, window);
}

// SymSeries wire format:
// {"nvars": 3, "cutoff": "p/q",
//  "coeffs": [{"partition": ["p/q", ...], "re": 1.0, "im": 0.0}, ...]}

inline Json sym_to_json(const SymSeries& f) {
    Json coeffs = Json::array();
    for (const auto& [beta, c] : f.coeffs()) {
        Json parts = Json::array();
        for (const auto& p : beta.parts()) parts.push_back(exp_to_string(p));
        coeffs.push_back(Json{{"partition", std::move(parts)},
                              {"re", c.real()},
                              {"im", c.imag()}});
    }
    return Json{{"nvars", f.nvars()},
                {"cutoff", exp_to_string(f.cutoff())},
                {"coeffs", std::move(coeffs)}};
}

inline SymSeries sym_from_json(const Json& j) {
    int nvars = j.at("nvars").get<int>();
    Exponent cutoff = exp_from_string(j.at("cutoff").get<std::string>());
    std::vector<std::pair<RealPartition, Complex>> terms;
    for (const auto& t : j.at("coeffs")) {
        std::vector<Exponent> parts;
        for (const auto& p : t.at("partition"))
            parts.push_back(exp_from_string(p.get<std::string>()));
        Complex c(t.at("re").get<double>(), t.at("im").get<double>());
        terms.emplace_back(RealPartition(std::move(parts)), c);
    }
    return SymSeries::make(nvars, cutoff, terms);
}

inline Json pseudointeger_to_json(const Pseudointeger& a) {
    Json residues = Json::array();
    for (long n = 1; n <= a.bound(); ++n) residues.push_back(a.residue(n));
    return Json{{"bound", a.bound()}, {"residues", std::move(residues)}};
}

} // namespace anser

#endif
