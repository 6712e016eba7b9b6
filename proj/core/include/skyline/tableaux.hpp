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

#ifndef SKYLINE_TABLEAUX_HPP_
#define SKYLINE_TABLEAUX_HPP_

#include <functional>
#include <string>
#include <vector>

#include "skyline/shapes.hpp"

namespace skyline {

// Semistandard Young tableau in French convention over the alphabet [n].
// rows()[0] is the bottom row. Rows weakly increase left to right and
// columns strictly increase bottom to top.
class Tableau {
 public:
  Tableau() = default;
  // Throws std::invalid_argument if the filling is not semistandard.
  Tableau(std::vector<std::vector<int>> rows, int n);

  // Rebuilds a tableau from its column word and column lengths.
  static Tableau from_column_word(const std::vector<int>& word,
                                  const std::vector<int>& column_lengths, int n);
  // Rebuilds a tableau from its columns, each listed bottom to top.
  static Tableau from_columns(const std::vector<std::vector<int>>& columns, int n);

  int alphabet() const { return n_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_columns() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
  // 1-based (row, column); row 1 is the bottom row.
  int entry(int row, int col) const;
  // Column c (1-based), bottom to top.
  std::vector<int> column(int c) const;
  std::vector<int> column_lengths() const;
  int size() const;

  // Shape padded with zeros to length n.
  Partition shape() const;
  // content()[v-1] is the number of entries equal to v.
  WeakComposition content() const;

  // Each column read top to bottom, columns taken left to right.
  std::vector<int> column_word() const;
  // Rows read left to right, top row first.
  std::vector<int> row_word() const;

  std::string to_string() const;
  // Multi-line French picture, top row first.
  std::string pretty() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

// key(gamma): column c is {j : gamma_j >= c}, increasing bottom to top.
Tableau key_tableau(const WeakComposition& gamma);

// True when every column is a subset of the column to its left.
bool is_key(const Tableau& t);

// Weight of a key tableau: gamma_j is the number of columns containing j.
WeakComposition key_weight(const Tableau& key);

// Schutzenberger evacuation.
Tableau evacuation(const Tableau& t);

// Entrywise comparison; throws unless the shapes agree.
bool entrywise_leq(const Tableau& a, const Tableau& b);

// Every SSYT of the given shape over [n], lexicographic on the bottom-up
// row-major filling.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n);
void for_each_ssyt(const Partition& shape, int n, const std::function<void(const Tableau&)>& fn);

// Highest weight tableau of shape lambda: row i is filled with i.
Tableau yamanouchi(const Partition& lambda, int n);

}  // namespace skyline

#endif  // SKYLINE_TABLEAUX_HPP_
