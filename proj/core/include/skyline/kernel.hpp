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

#ifndef SKYLINE_KERNEL_HPP_
#define SKYLINE_KERNEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "skyline/permutations.hpp"
#include "skyline/polynomials.hpp"
#include "skyline/shapes.hpp"

namespace skyline {

// The product over cells (i,j) of lambda of 1/(1 - x_i y_j), where lambda is
// truncated_staircase(n, m, k).
struct KernelInstance {
  int n = 0;
  int m = 0;
  int k = 0;
  Partition lambda;

  bool is_rectangle() const { return n + 1 == m + k; }
  bool is_staircase() const { return m == n && k == n; }
  std::string to_string() const;
};

KernelInstance make_kernel_instance(int n, int m, int k);

// Requires k <= m.
ReducedWord sigma_se_word(int n, int m, int k);
// Requires m <= k. Equal to sigma_se_word(n, k, m).
ReducedWord sigma_nw_word(int n, int m, int k);
// Word (s_{n-k} ... s_1)(s_{n-k+1} ... s_2) ... (s_{n-1} ... s_k), which
// moves (v, 0^{n-k}) to (0^{n-k}, v) under bubble sorting.
ReducedWord shift_word(int n, int k);

// Length-k vector obtained by scanning i = k..1 and taking the largest of
// the last min(i, n-m+1) surviving entries of reverse(mu). Requires k <= m.
WeakComposition alpha_vector(const WeakComposition& mu, const KernelInstance& inst);
// Bubble sorts (reverse(mu), 0^{n-k}) along sigma_se_word. Length n.
WeakComposition alpha_via_sorting(const WeakComposition& mu, const KernelInstance& inst);

// Sum of x^a y^b over multisets of at most d cells of lambda. Both alphabets
// have size n.
Polynomial kernel_lhs(const KernelInstance& inst, int d);

// Atom times key expansion of the kernel, truncated at d. For k <= m it is
// the sum over mu in N^k with |mu| <= d of atom(mu)(x) key(0^{m-k}, alpha)(y);
// for m < k the conjugate instance is used with the alphabets exchanged.
Polynomial kernel_rhs(const KernelInstance& inst, int d, int jobs = 1);

// Sum over partitions p with |p| <= d of s_p(x_1..x_k) s_p(y_1..y_m).
// Only defined for rectangles.
Polynomial classical_cauchy_rhs(const KernelInstance& inst, int d);

struct ExpansionReport {
  KernelInstance instance;
  int degree = 0;
  Polynomial lhs;
  Polynomial rhs;
  bool equal = false;
  std::optional<Exponent> first_mismatch;
  Integer lhs_coefficient;
  Integer rhs_coefficient;
};

ExpansionReport verify_expansion(const KernelInstance& inst, int d, int jobs = 1);

}  // namespace skyline

#endif  // SKYLINE_KERNEL_HPP_
