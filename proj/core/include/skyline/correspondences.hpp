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

#ifndef SKYLINE_CORRESPONDENCES_HPP_
#define SKYLINE_CORRESPONDENCES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skyline/shapes.hpp"
#include "skyline/skyline.hpp"
#include "skyline/tableaux.hpp"

namespace skyline {

struct Biletter {
  int top = 0;
  int bottom = 0;
  friend bool operator==(const Biletter&, const Biletter&) = default;
  friend auto operator<=>(const Biletter&, const Biletter&) = default;
};

// A two-row array of positive integers sorted lexicographically: by top,
// then by bottom.
class Biword {
 public:
  Biword() = default;
  // Throws unless the letters are positive and in lexicographic order.
  explicit Biword(std::vector<Biletter> letters);

  // Parses "i_1 ... i_l / j_1 ... j_l" or a JSON array of [i, j] pairs.
  static Biword parse(const std::string& text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Biletter>& letters() const { return letters_; }
  const Biletter& operator[](std::size_t r) const { return letters_[r]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::vector<int> top_row() const;
  std::vector<int> bottom_row() const;
  int max_letter() const;
  // Throws unless every letter lies in [n].
  void require_alphabet(int n) const;

  // "i_1 ... i_l / j_1 ... j_l"
  std::string to_string() const;

  friend bool operator==(const Biword&, const Biword&) = default;

 private:
  std::vector<Biletter> letters_;
};

// Sorts a multiset of pairs (top, bottom) into a biword over [n].
Biword from_multiset(std::vector<std::pair<int, int>> cells, int n);

struct TableauPair {
  Tableau p;
  Tableau q;
};

// Row insertion RSK: P collects bottom letters, Q records top letters.
TableauPair rsk(const Biword& w, int n);
Biword rsk_inverse(const Tableau& p, const Tableau& q);

struct SsafPair {
  Ssaf f;
  Ssaf g;
  friend bool operator==(const SsafPair&, const SsafPair&) = default;
};

// State after one biletter has been processed by phi.
struct PhiStep {
  Biletter letter;
  int height = 0;
  int f_column = 0;
  int g_column = 0;
  Ssaf f;
  Ssaf g;
};

// Biletters are processed from last to first: j is inserted into F and i is
// placed in G at the height where the insertion stopped.
SsafPair phi(const Biword& w, int n);
std::vector<PhiStep> phi_trace(const Biword& w, int n);

// Throws std::invalid_argument if (F, G) is not in the image of phi.
Biword phi_inverse(const Ssaf& f, const Ssaf& g);

// psi(P) = F and psi(Q) = G where (P, Q) = rsk(w) and (F, G) = phi(w).
bool rsk_commutes_check(const Biword& w, int n);

struct TheoremSides {
  bool lhs = false;
  bool rhs = false;
};

// lhs: every biletter satisfies i + j <= n + 1.
// rhs: key(sh G) <= key(reverse of sh F).
TheoremSides main_theorem_predicate(const Biword& w, int n);

// For w with top row in [k] and bottom row in [m], checks that sh G vanishes
// beyond position k and sh F beyond position m.
bool alphabet_support_check(const Biword& w, int n, int k, int m);

// Exchanges the two rows and re-sorts.
Biword swap_rows(const Biword& w);

// Every biword over [n] x [n] with exactly `length` letters, in lexicographic
// order of the underlying multisets.
std::vector<Biword> enumerate_biwords(int n, int length);

struct MainTheoremReport {
  int n = 0;
  int max_length = 0;
  std::uint64_t checked = 0;
  std::uint64_t inside_staircase = 0;
  std::uint64_t failures = 0;
  std::optional<Biword> first_failure;
  bool ok() const { return failures == 0; }
};

// Checks the lhs = rhs equivalence on every biword over [n] x [n] with at
// most max_length letters. Work is split by first biletter over `jobs` threads.
MainTheoremReport verify_main_theorem(int n, int max_length, int jobs = 1);

}  // namespace skyline

#endif  // SKYLINE_CORRESPONDENCES_HPP_
