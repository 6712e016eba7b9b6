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

#ifndef SKYLINE_PERMUTATIONS_HPP_
#define SKYLINE_PERMUTATIONS_HPP_

#include <string>
#include <vector>

#include "skyline/shapes.hpp"

namespace skyline {

// A permutation of {1,...,n} stored in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  // Throws unless one_line is a permutation of 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);
  // The simple transposition s_i of S_n, 1 <= i < n.
  static Permutation simple(int i, int n);
  // Accepts "21534" for n <= 9 or "2,1,5,3,4".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(one_line_.size()); }
  // sigma(i) for 1-based i.
  int operator()(int i) const;
  const std::vector<int>& one_line() const { return one_line_; }

  // Number of inversions.
  int length() const;
  Permutation inverse() const;
  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;

  // (sigma * tau)(i) = sigma(tau(i)).
  friend Permutation operator*(const Permutation& sigma, const Permutation& tau);

  // Natural action on length-n compositions: (sigma g)_{sigma(j)} = g_j.
  WeakComposition act(const WeakComposition& gamma) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// A word (i_N, ..., i_1) for the product s_{i_N} ... s_{i_1}, stored in the
// written order. The rightmost letter acts first.
class ReducedWord {
 public:
  ReducedWord() = default;
  // Throws if some letter is outside [1, n-1] or the word is not reduced.
  ReducedWord(std::vector<int> letters, int n);

  int rank() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<int>& letters() const { return letters_; }
  Permutation product() const;
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<int> letters_;
  int n_ = 0;
};

// Product s_{w_1} s_{w_2} ... of an arbitrary word in S_n.
Permutation word_product(const std::vector<int>& word, int n);

bool is_reduced(const std::vector<int>& word, int n);

// Reduced word obtained by repeatedly splitting off the leftmost right descent.
ReducedWord reduced_word(const Permutation& sigma);

// Strong Bruhat order, decided by the key tableau criterion on sigma(n,...,1).
bool bruhat_leq(const Permutation& theta, const Permutation& sigma);

// Key tableau criterion: key(sigma(n..1)) <= key(beta(n..1)) entrywise.
bool tableau_criterion_leq(const Permutation& sigma, const Permutation& beta);

// Bruhat order on the orbit of a partition; throws unless a and b are
// rearrangements of each other.
bool orbit_bruhat_leq(const WeakComposition& a, const WeakComposition& b);

// The shortest w with w(gamma^+) = gamma.
Permutation min_coset_rep(const WeakComposition& gamma);

// Bubble sort operator pi_i on a composition: sorts positions i, i+1 into
// increasing order (1-based i).
WeakComposition bubble_sort_op(int i, const WeakComposition& gamma);

// Applies a word of bubble sort operators; the rightmost letter acts first.
WeakComposition apply_bubble_word(const std::vector<int>& word, const WeakComposition& gamma);

// Applies s_{w_1} ... s_{w_N} to gamma, rightmost first.
WeakComposition apply_reflection_word(const std::vector<int>& word, const WeakComposition& gamma);

// All permutations of n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace skyline

#endif  // SKYLINE_PERMUTATIONS_HPP_
