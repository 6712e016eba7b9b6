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

#ifndef SKYLINE_DEMAZURE_HPP_
#define SKYLINE_DEMAZURE_HPP_

#include <vector>

#include "skyline/polynomials.hpp"
#include "skyline/shapes.hpp"

namespace skyline {

enum class OpKind { kPi, kPiHat };

struct DemazureOp {
  OpKind kind = OpKind::kPi;
  int index = 1;
};

// Isobaric divided difference pi_i acting on the x alphabet.
Polynomial pi(int i, const Polynomial& f);
// pi_i - 1.
Polynomial pihat(int i, const Polynomial& f);
Polynomial apply_op(const DemazureOp& op, const Polynomial& f);

// Applies the operators of `word`, rightmost first.
Polynomial apply_op_word(OpKind kind, const std::vector<int>& word, const Polynomial& f);
Polynomial apply_op_word(const std::vector<DemazureOp>& word, const Polynomial& f);

// Key polynomial in length(alpha) variables. Results are memoized.
Polynomial key_polynomial(const WeakComposition& alpha);
// Demazure atom in length(alpha) variables. Results are memoized.
Polynomial atom(const WeakComposition& alpha);

// Sum of x^F over SSAFs of shape alpha.
Polynomial atom_via_ssaf(const WeakComposition& alpha);
// Sum of atom_via_ssaf(beta) over beta <= alpha in the orbit order.
Polynomial key_via_ssaf(const WeakComposition& alpha);

// Schur polynomial s_lambda(x_1..x_n) by SSYT enumeration.
Polynomial schur_polynomial(const Partition& lambda, int n);

// Drops every memoized key polynomial and atom.
void clear_demazure_cache();

}  // namespace skyline

#endif  // SKYLINE_DEMAZURE_HPP_
