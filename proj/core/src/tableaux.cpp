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

#include "skyline/tableaux.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skyline {

Tableau::Tableau(std::vector<std::vector<int>> rows, int n) : rows_(std::move(rows)), n_(n) {
  if (n < 0) throw std::invalid_argument("negative alphabet size");
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("tableau has an empty row below a nonempty one");
    if (r > 0 && row.size() > rows_[r - 1].size()) {
      throw std::invalid_argument("tableau row lengths must weakly decrease upward");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) throw std::invalid_argument("tableau entry outside [n]");
      if (c > 0 && row[c - 1] > row[c]) throw std::invalid_argument("tableau row not weakly increasing");
      if (r > 0 && rows_[r - 1][c] >= row[c]) {
        throw std::invalid_argument("tableau column not strictly increasing");
      }
    }
  }
}

Tableau Tableau::from_columns(const std::vector<std::vector<int>>& columns, int n) {
  std::vector<std::vector<int>> rows;
  for (const auto& col : columns) {
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (rows.size() <= r) rows.emplace_back();
      rows[r].push_back(col[r]);
    }
  }
  return Tableau(std::move(rows), n);
}

Tableau Tableau::from_column_word(const std::vector<int>& word,
                                  const std::vector<int>& column_lengths, int n) {
  std::vector<std::vector<int>> columns;
  std::size_t pos = 0;
  for (int len : column_lengths) {
    if (len < 0 || pos + len > word.size()) throw std::invalid_argument("column word too short");
    std::vector<int> col(word.begin() + pos, word.begin() + pos + len);
    std::reverse(col.begin(), col.end());
    columns.push_back(std::move(col));
    pos += len;
  }
  if (pos != word.size()) throw std::invalid_argument("column word too long");
  return from_columns(columns, n);
}

int Tableau::entry(int row, int col) const {
  if (row < 1 || row > num_rows() || col < 1 || col > static_cast<int>(rows_[row - 1].size())) {
    throw std::out_of_range("tableau cell out of range");
  }
  return rows_[row - 1][col - 1];
}

std::vector<int> Tableau::column(int c) const {
  std::vector<int> out;
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) >= c) out.push_back(row[c - 1]);
  }
  return out;
}

std::vector<int> Tableau::column_lengths() const {
  std::vector<int> out(num_columns(), 0);
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) ++out[c];
  }
  return out;
}

int Tableau::size() const {
  int s = 0;
  for (const auto& row : rows_) s += static_cast<int>(row.size());
  return s;
}

Partition Tableau::shape() const {
  std::vector<int> parts(std::max<std::size_t>(n_, rows_.size()), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) parts[r] = static_cast<int>(rows_[r].size());
  return Partition(std::move(parts));
}

WeakComposition Tableau::content() const {
  std::vector<int> c(n_, 0);
  for (const auto& row : rows_) {
    for (int v : row) ++c[v - 1];
  }
  return WeakComposition(std::move(c));
}

std::vector<int> Tableau::column_word() const {
  std::vector<int> out;
  for (int c = 1; c <= num_columns(); ++c) {
    auto col = column(c);
    out.insert(out.end(), col.rbegin(), col.rend());
  }
  return out;
}

std::vector<int> Tableau::row_word() const {
  std::vector<int> out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::string Tableau::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out << ',';
    out << '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out << ',';
      out << rows_[r][c];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string Tableau::pretty() const {
  std::ostringstream out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    for (std::size_t c = 0; c < it->size(); ++c) {
      if (c) out << ' ';
      out << (*it)[c];
    }
    out << '\n';
  }
  return out.str();
}

Tableau key_tableau(const WeakComposition& gamma) {
  const int n = static_cast<int>(gamma.size());
  std::vector<std::vector<int>> columns;
  for (int c = 1; c <= gamma.max_entry(); ++c) {
    std::vector<int> col;
    for (int j = 1; j <= n; ++j) {
      if (gamma[j - 1] >= c) col.push_back(j);
    }
    columns.push_back(std::move(col));
  }
  return Tableau::from_columns(columns, n);
}

bool is_key(const Tableau& t) {
  for (int c = 2; c <= t.num_columns(); ++c) {
    auto left = t.column(c - 1);
    auto right = t.column(c);
    if (!std::includes(left.begin(), left.end(), right.begin(), right.end())) return false;
  }
  return true;
}

WeakComposition key_weight(const Tableau& key) {
  if (!is_key(key)) throw std::invalid_argument("key_weight: not a key tableau");
  return key.content();
}

namespace {

struct Standardized {
  std::vector<std::vector<int>> labels;  // same shape, labels 1..N
  std::vector<int> value_of;             // value_of[label]
};

Standardized standardize(const Tableau& t) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> order;
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < static_cast<int>(t.rows()[r].size()); ++c) {
      order.push_back({{t.rows()[r][c], c}, {r, c}});
    }
  }
  std::sort(order.begin(), order.end());
  Standardized s;
  s.labels.resize(t.num_rows());
  for (int r = 0; r < t.num_rows(); ++r) s.labels[r].assign(t.rows()[r].size(), 0);
  s.value_of.assign(order.size() + 1, 0);
  int label = 0;
  for (const auto& [key, cell] : order) {
    ++label;
    s.labels[cell.first][cell.second] = label;
    s.value_of[label] = key.first;
  }
  return s;
}

}  // namespace

Tableau evacuation(const Tableau& t) {
  Standardized s = standardize(t);
  auto& g = s.labels;
  std::vector<std::vector<int>> result(g.size());
  for (std::size_t r = 0; r < g.size(); ++r) result[r].assign(g[r].size(), 0);
  const int total = t.size();
  // Current diagram size per row; cells beyond it have been vacated.
  std::vector<int> len(g.size());
  for (std::size_t r = 0; r < g.size(); ++r) len[r] = static_cast<int>(g[r].size());

  for (int step = 1; step <= total; ++step) {
    int r = 0;
    int c = 0;
    while (true) {
      bool has_right = c + 1 < len[r];
      bool has_above = r + 1 < static_cast<int>(len.size()) && c < len[r + 1];
      if (!has_right && !has_above) break;
      if (has_above && (!has_right || g[r + 1][c] < g[r][c + 1])) {
        g[r][c] = g[r + 1][c];
        ++r;
      } else {
        g[r][c] = g[r][c + 1];
        ++c;
      }
    }
    --len[r];
    result[r][c] = t.alphabet() + 1 - s.value_of[step];
  }
  return Tableau(std::move(result), t.alphabet());
}

bool entrywise_leq(const Tableau& a, const Tableau& b) {
  if (a.num_rows() != b.num_rows() || a.column_lengths() != b.column_lengths()) {
    throw std::invalid_argument("entrywise_leq: tableaux of different shapes");
  }
  for (int r = 0; r < a.num_rows(); ++r) {
    for (std::size_t c = 0; c < a.rows()[r].size(); ++c) {
      if (a.rows()[r][c] > b.rows()[r][c]) return false;
    }
  }
  return true;
}

namespace {

void ssyt_rec(const std::vector<int>& row_lengths, int n, std::size_t r, std::size_t c,
              std::vector<std::vector<int>>& rows, const std::function<void(const Tableau&)>& fn) {
  if (r == row_lengths.size()) {
    fn(Tableau(rows, n));
    return;
  }
  if (c == static_cast<std::size_t>(row_lengths[r])) {
    ssyt_rec(row_lengths, n, r + 1, 0, rows, fn);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[r][c - 1]);
  if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
  // Leave room for the strictly increasing column above.
  int above = 0;
  for (std::size_t rr = r + 1; rr < row_lengths.size(); ++rr) {
    if (static_cast<std::size_t>(row_lengths[rr]) > c) ++above;
  }
  for (int v = lo; v <= n - above; ++v) {
    rows[r][c] = v;
    ssyt_rec(row_lengths, n, r, c + 1, rows, fn);
  }
}

}  // namespace

void for_each_ssyt(const Partition& shape, int n, const std::function<void(const Tableau&)>& fn) {
  std::vector<int> row_lengths;
  for (int p : shape) {
    if (p > 0) row_lengths.push_back(p);
  }
  if (static_cast<int>(row_lengths.size()) > n) return;
  std::vector<std::vector<int>> rows;
  for (int len : row_lengths) rows.emplace_back(len, 0);
  ssyt_rec(row_lengths, n, 0, 0, rows, fn);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, n, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

Tableau yamanouchi(const Partition& lambda, int n) {
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] > 0) rows.emplace_back(lambda[i], static_cast<int>(i) + 1);
  }
  return Tableau(std::move(rows), n);
}

}  // namespace skyline
