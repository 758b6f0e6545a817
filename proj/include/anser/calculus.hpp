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

#ifndef ANSER_CALCULUS_HPP
#define ANSER_CALCULUS_HPP

#include "anser/series.hpp"

namespace anser {

/// Formal derivative: x^a -> a*x^{a-1} termwise. Constants vanish exactly;
/// the window bound shifts down by one.
template <Coefficient C>
BasicSeries<C> derivative(const BasicSeries<C>& f) {
    typename BasicSeries<C>::term_map out;
    for (const auto& [e, c] : f.terms()) {
        if (e == 0) continue;
        out.emplace(e - 1, coeff_scale(c, Complex(exp_to_double(e), 0.0)));
    }
    return BasicSeries<C>::normalized(f.orientation(), f.window() - 1,
                                      std::move(out));
}

} // namespace anser

#endif
