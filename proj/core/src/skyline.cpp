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

#include "skyline/skyline.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skyline {

struct SsafAccess {
  static Ssaf make(std::vector<std::vector<int>> columns) {
    Ssaf f(0);
    f.columns_ = std::move(columns);
    return f;
  }
  static std::vector<std::vector<int>>& columns(Ssaf& f) { return f.columns_; }
};

namespace {

using Columns = std::vector<std::vector<int>>;

int value_at(const Columns& cols, int row, int j) {
  if (row == 0) return j;
  const auto& col = cols[j - 1];
  return static_cast<int>(col.size()) >= row ? col[row - 1] : 0;
}

int max_height_of(const Columns& cols) {
  std::size_t h = 0;
  for (const auto& c : cols) h = std::max(h, c.size());
  return static_cast<int>(h);
}

std::vector<Cell> reading_cells(const Columns& cols) {
  std::vector<Cell> out;
  const int n = static_cast<int>(cols.size());
  for (int r = max_height_of(cols); r >= 0; --r) {
    for (int j = 1; j <= n; ++j) {
      if (r == 0 || static_cast<int>(cols[j - 1].size()) >= r) out.push_back({r, j});
    }
  }
  return out;
}

// Counterclockwise cyclic order a < b < c up to rotation.
bool ccw(const std::pair<int, int>& a, const std::pair<int, int>& b,
         const std::pair<int, int>& c) {
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

}  // namespace

Ssaf::Ssaf(int n) {
  if (n < 0) throw std::invalid_argument("negative SSAF rank");
  columns_.assign(n, {});
}

Ssaf Ssaf::from_columns(std::vector<std::vector<int>> columns) {
  if (auto why = find_ssaf_violation(columns)) throw std::invalid_argument("invalid SSAF: " + *why);
  return SsafAccess::make(std::move(columns));
}

int Ssaf::height(int j) const {
  if (j < 1 || j > rank()) throw std::out_of_range("SSAF column out of range");
  return static_cast<int>(columns_[j - 1].size());
}

int Ssaf::value(int row, int j) const {
  if (j < 1 || j > rank() || row < 0) throw std::out_of_range("SSAF cell out of range");
  return value_at(columns_, row, j);
}

int Ssaf::max_height() const { return max_height_of(columns_); }

int Ssaf::size() const {
  int s = 0;
  for (const auto& c : columns_) s += static_cast<int>(c.size());
  return s;
}

WeakComposition Ssaf::shape() const {
  std::vector<int> h;
  for (const auto& c : columns_) h.push_back(static_cast<int>(c.size()));
  return WeakComposition(std::move(h));
}

WeakComposition Ssaf::content() const {
  std::vector<int> w(columns_.size(), 0);
  for (const auto& c : columns_) {
    for (int v : c) ++w[v - 1];
  }
  return WeakComposition(std::move(w));
}

std::vector<Cell> Ssaf::reading_order() const { return reading_cells(columns_); }

std::vector<int> Ssaf::reading_word() const {
  std::vector<int> out;
  for (const Cell& cell : reading_cells(columns_)) {
    if (cell.row > 0) out.push_back(value_at(columns_, cell.row, cell.col));
  }
  return out;
}

std::string Ssaf::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (j) out << ',';
    out << '[';
    for (std::size_t r = 0; r < columns_[j].size(); ++r) {
      if (r) out << ',';
      out << columns_[j][r];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string Ssaf::pretty() const {
  std::ostringstream out;
  const int n = rank();
  for (int r = max_height(); r >= 0; --r) {
    for (int j = 1; j <= n; ++j) {
      if (j > 1) out << ' ';
      int v = value_at(columns_, r, j);
      if (v == 0) {
        out << '.';
      } else {
        out << v;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::optional<std::string> find_ssaf_violation(const Columns& cols) {
  const int n = static_cast<int>(cols.size());
  for (int j = 1; j <= n; ++j) {
    const auto& c = cols[j - 1];
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (c[r] < 1 || c[r] > n) {
        return "entry " + std::to_string(c[r]) + " in column " + std::to_string(j) + " outside [n]";
      }
      if (r == 0 && c[r] != j) {
        return "first entry of column " + std::to_string(j) + " differs from its basement";
      }
      if (r > 0 && c[r] > c[r - 1]) {
        return "column " + std::to_string(j) + " is not weakly decreasing";
      }
    }
  }
  // Standardize: ties broken by position in reading order.
  std::map<std::pair<int, int>, int> position;
  {
    int idx = 0;
    for (const Cell& cell : reading_cells(cols)) position[{cell.row, cell.col}] = idx++;
  }
  auto key = [&](int row, int j) {
    return std::make_pair(value_at(cols, row, j), position.at({row, j}));
  };
  for (int j = 1; j <= n; ++j) {
    const int hj = static_cast<int>(cols[j - 1].size());
    for (int jp = j + 1; jp <= n; ++jp) {
      const int hjp = static_cast<int>(cols[jp - 1].size());
      if (hj >= hjp) {
        for (int r = 1; r <= hjp; ++r) {
          if (!ccw(key(r, j), key(r - 1, j), key(r, jp))) {
            return "type 1 triple at row " + std::to_string(r) + ", columns " + std::to_string(j) +
                   " and " + std::to_string(jp) + " is not an inversion triple";
          }
        }
      } else {
        for (int r = 0; r <= hj; ++r) {
          if (!ccw(key(r, j), key(r + 1, jp), key(r, jp))) {
            return "type 2 triple at row " + std::to_string(r) + ", columns " + std::to_string(j) +
                   " and " + std::to_string(jp) + " is not an inversion triple";
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_valid_ssaf(const Columns& columns) { return !find_ssaf_violation(columns).has_value(); }

bool type2_inequality_holds(const Ssaf& f) {
  const auto& cols = f.columns();
  const int n = f.rank();
  for (int j = 1; j <= n; ++j) {
    for (int jp = j + 1; jp <= n; ++jp) {
      if (f.height(jp) <= f.height(j)) continue;
      for (int r = 0; r <= f.height(j); ++r) {
        int a = value_at(cols, r, j);
        int b = value_at(cols, r + 1, jp);
        int c = value_at(cols, r, jp);
        if (!(a < b && b <= c)) return false;
      }
    }
  }
  return true;
}

Ssaf key_ssaf(const WeakComposition& gamma) {
  Columns cols;
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    cols.emplace_back(gamma[j], static_cast<int>(j) + 1);
  }
  return SsafAccess::make(std::move(cols));
}

InsertionResult insert(int k, const Ssaf& f) {
  const int n = f.rank();
  if (k < 1 || k > n) throw std::out_of_range("inserted letter outside [n]");
  InsertionResult res{f, 0, 0, {k}};
  Columns& cols = SsafAccess::columns(res.filling);
  const std::vector<Cell> cells = reading_cells(cols);
  int x = k;
  std::size_t idx = 0;
  while (true) {
    if (idx >= cells.size()) throw std::logic_error("SSAF insertion ran past the basement");
    const Cell cell = cells[idx];
    const int a = value_at(cols, cell.row, cell.col);
    const int b = value_at(cols, cell.row + 1, cell.col);
    if (a < x || b >= x) {
      ++idx;
      continue;
    }
    if (b == 0) {
      cols[cell.col - 1].push_back(x);
      res.height = cell.row + 1;
      res.column = cell.col;
      return res;
    }
    cols[cell.col - 1][cell.row] = x;
    x = b;
    res.chain.push_back(x);
    ++idx;
  }
}

UninsertionResult uninsert(const Ssaf& f, int column) {
  if (column < 1 || column > f.rank()) throw std::out_of_range("uninsert column out of range");
  if (f.height(column) == 0) throw std::invalid_argument("uninsert from an empty column");
  UninsertionResult res{f, 0};
  Columns& cols = SsafAccess::columns(res.filling);
  int x = cols[column - 1].back();
  cols[column - 1].pop_back();
  const int h = static_cast<int>(cols[column - 1].size()) + 1;
  const std::vector<Cell> cells = reading_cells(cols);
  auto start = std::find(cells.begin(), cells.end(), Cell{h - 1, column});
  for (auto it = std::make_reverse_iterator(start); it != cells.rend(); ++it) {
    const int a = value_at(cols, it->row, it->col);
    const int b = value_at(cols, it->row + 1, it->col);
    const int above = value_at(cols, it->row + 2, it->col);
    if (b != 0 && a >= b && b > x && above <= x) {
      cols[it->col - 1][it->row] = x;
      x = b;
    }
  }
  res.letter = x;
  return res;
}

int rightmost_column_of_height(const Ssaf& f, int h) {
  for (int j = f.rank(); j >= 1; --j) {
    if (f.height(j) == h) return j;
  }
  return 0;
}

Ssaf psi(const Tableau& t) {
  Ssaf f(t.alphabet());
  const std::vector<int> word = t.column_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = insert(*it, f).filling;
  return f;
}

namespace {

std::vector<std::vector<int>> row_insert(const std::vector<int>& word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(x, *it);
    }
  }
  return rows;
}

}  // namespace

Tableau psi_inverse(const Ssaf& f) {
  // Pair F with the key filling of its own shape and undo the RSK analogue:
  // the recording letter removed last-in-first-out is always the leftmost
  // nonempty column, and the letter of F is recovered by uninsertion at the
  // rightmost column of the matching height. Row inserting the recovered
  // letters in biword order gives T.
  std::vector<int> recording = f.shape().entries();
  std::vector<std::pair<int, int>> biletters;
  Ssaf cur = f;
  while (cur.size() > 0) {
    int top = 0;
    while (recording[top] == 0) ++top;
    const int h = recording[top]--;
    const int j = rightmost_column_of_height(cur, h);
    if (j == 0) throw std::invalid_argument("psi_inverse: filling is not in the image of psi");
    UninsertionResult u = uninsert(cur, j);
    biletters.emplace_back(top + 1, u.letter);
    cur = std::move(u.filling);
  }
  std::sort(biletters.begin(), biletters.end());
  std::vector<int> word;
  for (const auto& b : biletters) word.push_back(b.second);
  Tableau t(row_insert(word), f.rank());
  if (psi(t) != f) throw std::invalid_argument("psi_inverse: filling is not in the image of psi");
  return t;
}

namespace detail {
Ssaf make_ssaf_unchecked(std::vector<std::vector<int>> columns) {
  return SsafAccess::make(std::move(columns));
}
}  // namespace detail

Tableau right_key(const Tableau& t) { return key_tableau(psi(t).shape()); }

std::vector<Ssaf> enumerate_ssaf(const WeakComposition& shape) {
  const int n = static_cast<int>(shape.size());
  std::vector<Cell> order;  // (row, col) filled column by column, bottom up
  for (int j = 1; j <= n; ++j) {
    for (int r = 1; r <= shape[j - 1]; ++r) order.push_back({r, j});
  }
  std::vector<Ssaf> out;
  Columns cols(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      if (is_valid_ssaf(cols)) out.push_back(SsafAccess::make(cols));
      return;
    }
    const Cell c = order[i];
    const int hi = c.row == 1 ? c.col : cols[c.col - 1].back();
    const int lo = c.row == 1 ? c.col : 1;
    for (int v = lo; v <= hi; ++v) {
      cols[c.col - 1].push_back(v);
      self(self, i + 1);
      cols[c.col - 1].pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace skyline
