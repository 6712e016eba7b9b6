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

#ifndef SKYLINE_SHAPES_HPP_
#define SKYLINE_SHAPES_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace skyline {

// A finite sequence of nonnegative integers with an explicit length.
// Trailing zeros are significant: (1,0) and (1) are different objects.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> entries);
  WeakComposition(std::initializer_list<int> entries);

  static WeakComposition zeros(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // 0-based access.
  int operator[](std::size_t i) const { return entries_[i]; }
  // 1-based access with bounds checking.
  int at(int i) const;
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  int total() const;
  int max_entry() const;
  bool is_weakly_decreasing() const;
  // Number of nonzero entries.
  int num_nonzero() const;

  // Decreasing rearrangement, same length.
  WeakComposition sorted_decreasing() const;
  WeakComposition reversed() const;
  // Swap entries i and i+1 (1-based).
  WeakComposition swapped(int i) const;
  WeakComposition concat(const WeakComposition& other) const;
  // First / last `count` entries.
  WeakComposition prefix(std::size_t count) const;
  WeakComposition suffix(std::size_t count) const;

  std::string to_string() const;
  // Accepts "(1,0,3)", "1,0,3" or "1 0 3".
  static WeakComposition parse(const std::string& text);

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> entries_;
};

// Throws std::invalid_argument unless a and b have the same length.
void require_same_length(const WeakComposition& a, const WeakComposition& b,
                         const char* what);

// Entrywise comparison; throws on length mismatch.
bool entrywise_leq(const WeakComposition& a, const WeakComposition& b);

// True when a and b are rearrangements of each other (same length).
bool same_orbit(const WeakComposition& a, const WeakComposition& b);

// A weakly decreasing weak composition. The length is kept, so a partition
// of length n may end in zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);
  explicit Partition(const WeakComposition& c);

  const WeakComposition& composition() const { return parts_; }
  operator const WeakComposition&() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int at(int i) const { return parts_.at(i); }
  int total() const { return parts_.total(); }
  // Number of nonzero parts.
  int length() const { return parts_.num_nonzero(); }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  Partition conjugate(std::size_t length) const;
  Partition padded(std::size_t length) const;
  std::string to_string() const { return parts_.to_string(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  WeakComposition parts_;
};

// A cell (row, column) of a diagram, both 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Cells of the Ferrers diagram, French convention: row i holds lambda_i cells.
std::vector<Cell> cells(const Partition& lambda);

// Column heights of a Ferrers diagram, i.e. the conjugate partition.
std::vector<int> column_lengths(const Partition& lambda);

// The partition (m^{n-m+1}, m-1, ..., n-k+1) with exactly k parts.
// Requires 1 <= m,k <= n and n+1 <= m+k.
Partition truncated_staircase(int n, int m, int k);

// Every distinct rearrangement of lambda, in lexicographic order.
std::vector<WeakComposition> orbit(const WeakComposition& lambda);

// Every partition of `total` with at most `length` parts, padded to `length`,
// in reverse lexicographic order.
std::vector<Partition> partitions_of(int total, int length);

// Every weak composition of the given length with total at most `max_total`.
std::vector<WeakComposition> compositions_up_to(int length, int max_total);

// Every weak composition of the given length and total.
std::vector<WeakComposition> compositions_of(int total, int length);

}  // namespace skyline

#endif  // SKYLINE_SHAPES_HPP_
