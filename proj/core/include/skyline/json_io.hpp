// Copyright 2026 The skyline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SKYLINE_JSON_IO_HPP_
#define SKYLINE_JSON_IO_HPP_

#include "json.hpp"
#include "skyline/correspondences.hpp"
#include "skyline/kernel.hpp"
#include "skyline/permutations.hpp"
#include "skyline/polynomials.hpp"
#include "skyline/shapes.hpp"
#include "skyline/skyline.hpp"
#include "skyline/tableaux.hpp"

namespace skyline {

using json = nlohmann::json;

// Decoders validate and throw std::invalid_argument on malformed input.

void to_json(json& j, const WeakComposition& c);
void from_json(const json& j, WeakComposition& c);
void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const Permutation& p);
void from_json(const json& j, Permutation& p);

// {"n": n, "shape": [...], "rows": [[...], ...]}, rows bottom-up.
void to_json(json& j, const Tableau& t);
void from_json(const json& j, Tableau& t);

// {"n": n, "columns": [[...], ...]}, columns bottom-up.
void to_json(json& j, const Ssaf& f);
void from_json(const json& j, Ssaf& f);

// Array of [i, j] pairs.
void to_json(json& j, const Biword& w);
void from_json(const json& j, Biword& w);

// Array of {"coeff", "x_exp", "y_exp"?}. Coefficients that do not fit in
// 64 bits are written as decimal strings.
void to_json(json& j, const Polynomial& p);
// Arity is taken from the first term; pass nx (and ny) for the zero polynomial.
Polynomial polynomial_from_json(const json& j, int nx = -1, int ny = -1);

json report_to_json(const ExpansionReport& r);
json report_to_json(const MainTheoremReport& r);

}  // namespace skyline

#endif  // SKYLINE_JSON_IO_HPP_
