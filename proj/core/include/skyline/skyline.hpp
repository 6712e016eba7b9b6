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

#ifndef SKYLINE_SKYLINE_HPP_
#define SKYLINE_SKYLINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "skyline/shapes.hpp"
#include "skyline/tableaux.hpp"

namespace skyline {

// Semistandard augmented filling with basement (1, ..., n).
//
// columns()[j-1] lists the entries of column j above the basement, bottom
// to top. Row 0 is the basement; the basement cell of column j holds j.
class Ssaf {
 public:
  // The empty filling with n columns.
  explicit Ssaf(int n = 0);
  // Throws std::invalid_argument describing the first violated condition.
  static Ssaf from_columns(std::vector<std::vector<int>> columns);

  int rank() const { return static_cast<int>(columns_.size()); }
  const std::vector<std::vector<int>>& columns() const { return columns_; }
  // Height of column j (1-based), basement excluded.
  int height(int j) const;
  // F(row, j) with row 0 the basement; 0 for a cell outside the diagram.
  int value(int row, int j) const;
  int max_height() const;
  int size() const;
  // Column heights.
  WeakComposition shape() const;
  WeakComposition content() const;

  // Cells in reading order: rows top to bottom, left to right within a row,
  // ending with the basement row.
  std::vector<Cell> reading_order() const;
  // Entries above the basement in reading order.
  std::vector<int> reading_word() const;

  std::string to_string() const;
  // Multi-line picture; '.' marks empty cells and the last line is the basement.
  std::string pretty() const;

  friend bool operator==(const Ssaf&, const Ssaf&) = default;
  friend auto operator<=>(const Ssaf&, const Ssaf&) = default;

 private:
  friend struct SsafAccess;
  std::vector<std::vector<int>> columns_;
};

// Returns a description of the first violated SSAF condition, if any.
std::optional<std::string> find_ssaf_violation(const std::vector<std::vector<int>>& columns);
bool is_valid_ssaf(const std::vector<std::vector<int>>& columns);

// Checks F(a) < F(b) <= F(c) on every type 2 triple.
bool type2_inequality_holds(const Ssaf& f);

// The unique SSAF of shape gamma whose column entries all equal their basement.
Ssaf key_ssaf(const WeakComposition& gamma);

struct InsertionResult {
  Ssaf filling;
  // Row of the new cell and its column, both 1-based.
  int height = 0;
  int column = 0;
  // Values carried by the insertion, starting with the inserted letter.
  std::vector<int> chain;
};

// Inserts k (1 <= k <= n) into F.
InsertionResult insert(int k, const Ssaf& f);

struct UninsertionResult {
  Ssaf filling;
  int letter = 0;
};

// Reverses insert() given the column of the cell it created.
UninsertionResult uninsert(const Ssaf& f, int column);

// Terminal column used by uninsert when peeling a cell at height h:
// the rightmost column whose height is exactly h. Returns 0 if none.
int rightmost_column_of_height(const Ssaf& f, int h);

// Inserts the column word of T, right to left, into the empty filling.
Ssaf psi(const Tableau& t);
Tableau psi_inverse(const Ssaf& f);

// Right key of T: key(shape of psi(T)).
Tableau right_key(const Tableau& t);

// Every SSAF of the given shape.
std::vector<Ssaf> enumerate_ssaf(const WeakComposition& shape);

namespace detail {
// Builds an Ssaf without validation. Callers guarantee the invariants.
Ssaf make_ssaf_unchecked(std::vector<std::vector<int>> columns);
}  // namespace detail

}  // namespace skyline

#endif  // SKYLINE_SKYLINE_HPP_
