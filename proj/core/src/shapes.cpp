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

#include "skyline/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skyline {

WeakComposition::WeakComposition(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) {
      throw std::invalid_argument("weak composition entries must be >= 0");
    }
  }
}

WeakComposition::WeakComposition(std::initializer_list<int> entries)
    : WeakComposition(std::vector<int>(entries)) {}

WeakComposition WeakComposition::zeros(std::size_t n) {
  return WeakComposition(std::vector<int>(n, 0));
}

int WeakComposition::at(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > entries_.size()) {
    throw std::out_of_range("composition index out of range");
  }
  return entries_[i - 1];
}

int WeakComposition::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int WeakComposition::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

bool WeakComposition::is_weakly_decreasing() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

int WeakComposition::num_nonzero() const {
  return static_cast<int>(
      std::count_if(entries_.begin(), entries_.end(), [](int e) { return e != 0; }));
}

WeakComposition WeakComposition::sorted_decreasing() const {
  std::vector<int> v = entries_;
  std::sort(v.begin(), v.end(), std::greater<>());
  return WeakComposition(std::move(v));
}

WeakComposition WeakComposition::reversed() const {
  return WeakComposition(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

WeakComposition WeakComposition::swapped(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) >= entries_.size()) {
    throw std::out_of_range("swap index out of range");
  }
  std::vector<int> v = entries_;
  std::swap(v[i - 1], v[i]);
  return WeakComposition(std::move(v));
}

WeakComposition WeakComposition::concat(const WeakComposition& other) const {
  std::vector<int> v = entries_;
  v.insert(v.end(), other.entries_.begin(), other.entries_.end());
  return WeakComposition(std::move(v));
}

WeakComposition WeakComposition::prefix(std::size_t count) const {
  if (count > entries_.size()) throw std::out_of_range("prefix too long");
  return WeakComposition(std::vector<int>(entries_.begin(), entries_.begin() + count));
}

WeakComposition WeakComposition::suffix(std::size_t count) const {
  if (count > entries_.size()) throw std::out_of_range("suffix too long");
  return WeakComposition(std::vector<int>(entries_.end() - count, entries_.end()));
}

std::string WeakComposition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

WeakComposition WeakComposition::parse(const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']') continue;
    cleaned.push_back(ch == ',' ? ' ' : ch);
  }
  std::istringstream in(cleaned);
  std::vector<int> v;
  std::string token;
  while (in >> token) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad composition token '" + token + "'");
    }
    if (pos != token.size()) {
      throw std::invalid_argument("bad composition token '" + token + "'");
    }
    v.push_back(value);
  }
  return WeakComposition(std::move(v));
}

void require_same_length(const WeakComposition& a, const WeakComposition& b,
                         const char* what) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << what << ": length mismatch " << a.to_string() << " vs " << b.to_string();
    throw std::invalid_argument(msg.str());
  }
}

bool entrywise_leq(const WeakComposition& a, const WeakComposition& b) {
  require_same_length(a, b, "entrywise_leq");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool same_orbit(const WeakComposition& a, const WeakComposition& b) {
  require_same_length(a, b, "same_orbit");
  return a.sorted_decreasing() == b.sorted_decreasing();
}

Partition::Partition(std::vector<int> parts) : Partition(WeakComposition(std::move(parts))) {}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(WeakComposition(std::vector<int>(parts))) {}

Partition::Partition(const WeakComposition& c) : parts_(c) {
  if (!parts_.is_weakly_decreasing()) {
    throw std::invalid_argument("not a partition: " + c.to_string());
  }
}

Partition Partition::conjugate(std::size_t length) const {
  std::vector<int> conj(length, 0);
  for (int part : parts_) {
    if (static_cast<std::size_t>(part) > length) {
      throw std::invalid_argument("conjugate does not fit in requested length");
    }
    for (int c = 0; c < part; ++c) ++conj[c];
  }
  return Partition(std::move(conj));
}

Partition Partition::padded(std::size_t length) const {
  std::vector<int> v = parts_.entries();
  while (v.size() > length) {
    if (v.back() != 0) throw std::invalid_argument("cannot shorten partition");
    v.pop_back();
  }
  v.resize(length, 0);
  return Partition(std::move(v));
}

std::vector<Cell> cells(const Partition& lambda) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 1; j <= lambda[i]; ++j) out.push_back({static_cast<int>(i) + 1, j});
  }
  return out;
}

std::vector<int> column_lengths(const Partition& lambda) {
  std::vector<int> out(lambda.size() ? lambda[0] : 0, 0);
  for (int part : lambda) {
    for (int c = 0; c < part; ++c) ++out[c];
  }
  return out;
}

Partition truncated_staircase(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1 || m > n || k > n || n + 1 > m + k) {
    std::ostringstream msg;
    msg << "truncated staircase needs 1 <= m,k <= n and n+1 <= m+k; got n=" << n
        << " m=" << m << " k=" << k;
    throw std::invalid_argument(msg.str());
  }
  std::vector<int> parts;
  parts.reserve(k);
  for (int i = 1; i <= k; ++i) parts.push_back(std::min(m, n + 1 - i));
  return Partition(std::move(parts));
}

std::vector<WeakComposition> orbit(const WeakComposition& lambda) {
  std::vector<int> v = lambda.entries();
  std::sort(v.begin(), v.end());
  std::vector<WeakComposition> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> v = cur;
    v.resize(length, 0);
    out.emplace_back(std::move(v));
    return;
  }
  if (cur.size() == length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, length, cur, out);
    cur.pop_back();
  }
}

void compositions_rec(std::size_t length, int remaining, bool exact, std::vector<int>& cur,
                      std::vector<WeakComposition>& out) {
  if (cur.size() == length) {
    if (!exact || remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.push_back(e);
    compositions_rec(length, remaining - e, exact, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total, int length) {
  if (total < 0 || length < 0) throw std::invalid_argument("partitions_of: negative input");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(total, total, static_cast<std::size_t>(length), cur, out);
  return out;
}

std::vector<WeakComposition> compositions_up_to(int length, int max_total) {
  if (max_total < 0 || length < 0) throw std::invalid_argument("negative input");
  std::vector<WeakComposition> out;
  std::vector<int> cur;
  compositions_rec(static_cast<std::size_t>(length), max_total, false, cur, out);
  return out;
}

std::vector<WeakComposition> compositions_of(int total, int length) {
  if (total < 0 || length < 0) throw std::invalid_argument("negative input");
  std::vector<WeakComposition> out;
  std::vector<int> cur;
  compositions_rec(static_cast<std::size_t>(length), total, true, cur, out);
  return out;
}

}  // namespace skyline
