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

#ifndef ANSER_CONFIG_HPP
#define ANSER_CONFIG_HPP

namespace anser::config {

namespace detail {
inline double& tolerance_storage() {
    static double tol = 1e-9;
    return tol;
}
} // namespace detail

/// Global coefficient tolerance. Coefficients of modulus <= tolerance()
/// are treated as zero (pruning, equality, leading-coefficient tests).
/// Intended to be set once at startup; not synchronized.
inline double tolerance() { return detail::tolerance_storage(); }

inline void set_tolerance(double tol) { detail::tolerance_storage() = tol; }

} // namespace anser::config

#endif
