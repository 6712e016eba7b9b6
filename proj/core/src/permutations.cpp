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

#include "skyline/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skyline/tableaux.hpp"

namespace skyline {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || static_cast<std::size_t>(v) > one_line_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find_first_of(", ") != std::string::npos) {
    v = WeakComposition::parse(text).entries();
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation text");
      v.push_back(ch - '0');
    }
  }
  return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("permutation argument out of range");
  return one_line_[i - 1];
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    for (std::size_t j = i + 1; j < one_line_.size(); ++j) {
      if (one_line_[i] > one_line_[j]) ++inv;
    }
  }
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) v[one_line_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(v));
}

bool Permutation::has_right_descent(int i) const {
  return (*this)(i) > (*this)(i + 1);
}

bool Permutation::has_left_descent(int i) const {
  return inverse().has_right_descent(i);
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> v(tau.size());
  for (int i = 1; i <= tau.size(); ++i) v[i - 1] = sigma(tau(i));
  return Permutation(std::move(v));
}

WeakComposition Permutation::act(const WeakComposition& gamma) const {
  if (gamma.size() != one_line_.size()) {
    throw std::invalid_argument("permutation action: length mismatch");
  }
  std::vector<int> v(gamma.size());
  for (std::size_t j = 0; j < gamma.size(); ++j) v[one_line_[j] - 1] = gamma[j];
  return WeakComposition(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  bool small = size() <= 9;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (!small && i) out << ',';
    out << one_line_[i];
  }
  return out.str();
}

Permutation word_product(const std::vector<int>& word, int n) {
  Permutation p = Permutation::identity(n);
  for (int i : word) p = p * Permutation::simple(i, n);
  return p;
}

bool is_reduced(const std::vector<int>& word, int n) {
  return word_product(word, n).length() == static_cast<int>(word.size());
}

ReducedWord::ReducedWord(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n) {
  for (int i : letters_) {
    if (i < 1 || i >= n) throw std::invalid_argument("reduced word letter out of range");
  }
  if (!is_reduced(letters_, n)) throw std::invalid_argument("word is not reduced");
}

Permutation ReducedWord::product() const { return word_product(letters_, n_); }

std::string ReducedWord::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ',';
    out << letters_[i];
  }
  out << ')';
  return out.str();
}

ReducedWord reduced_word(const Permutation& sigma) {
  std::vector<int> letters;
  Permutation cur = sigma;
  const int n = sigma.size();
  while (true) {
    int d = 0;
    for (int i = 1; i < n; ++i) {
      if (cur.has_right_descent(i)) {
        d = i;
        break;
      }
    }
    if (d == 0) break;
    // cur = (cur s_d) s_d, so d is the rightmost letter of the remaining word.
    letters.push_back(d);
    cur = cur * Permutation::simple(d, n);
  }
  std::reverse(letters.begin(), letters.end());
  return ReducedWord(std::move(letters), n);
}

bool tableau_criterion_leq(const Permutation& sigma, const Permutation& beta) {
  if (sigma.size() != beta.size()) throw std::invalid_argument("permutation size mismatch");
  const int n = sigma.size();
  std::vector<int> stair(n);
  for (int i = 0; i < n; ++i) stair[i] = n - i;
  WeakComposition base(stair);
  return entrywise_leq(key_tableau(sigma.act(base)), key_tableau(beta.act(base)));
}

bool bruhat_leq(const Permutation& theta, const Permutation& sigma) {
  return tableau_criterion_leq(theta, sigma);
}

bool orbit_bruhat_leq(const WeakComposition& a, const WeakComposition& b) {
  if (!same_orbit(a, b)) {
    throw std::invalid_argument("orbit_bruhat_leq: " + a.to_string() + " and " + b.to_string() +
                                " lie in different orbits");
  }
  return entrywise_leq(key_tableau(a), key_tableau(b));
}

Permutation min_coset_rep(const WeakComposition& gamma) {
  const int n = static_cast<int>(gamma.size());
  const int top = gamma.max_entry();
  std::vector<bool> used(n + 1, false);
  std::vector<int> one_line;
  one_line.reserve(n);
  // Columns of the key, rightmost first. Column 0 is the full column [n].
  for (int c = top; c >= 0; --c) {
    for (int j = 1; j <= n; ++j) {
      if (!used[j] && (c == 0 || gamma[j - 1] >= c)) {
        used[j] = true;
        one_line.push_back(j);
      }
    }
  }
  return Permutation(std::move(one_line));
}

WeakComposition bubble_sort_op(int i, const WeakComposition& gamma) {
  if (i < 1 || static_cast<std::size_t>(i) >= gamma.size()) {
    throw std::out_of_range("bubble sort index out of range");
  }
  if (gamma[i - 1] > gamma[i]) return gamma.swapped(i);
  return gamma;
}

WeakComposition apply_bubble_word(const std::vector<int>& word, const WeakComposition& gamma) {
  WeakComposition cur = gamma;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = bubble_sort_op(*it, cur);
  return cur;
}

WeakComposition apply_reflection_word(const std::vector<int>& word,
                                      const WeakComposition& gamma) {
  WeakComposition cur = gamma;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = cur.swapped(*it);
  return cur;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace skyline
