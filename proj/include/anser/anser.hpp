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

#ifndef ANSER_ANSER_HPP
#define ANSER_ANSER_HPP

#include "anser/calculus.hpp"
#include "anser/compose.hpp"
#include "anser/config.hpp"
#include "anser/errors.hpp"
#include "anser/eval.hpp"
#include "anser/parse.hpp"
#include "anser/power.hpp"
#include "anser/profinite.hpp"
#include "anser/rational.hpp"
#include "anser/scalar.hpp"
#include "anser/serialize.hpp"
#include "anser/series.hpp"
#include "anser/symmetric.hpp"

#endif
