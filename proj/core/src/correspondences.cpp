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

#include "skyline/correspondences.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "skyline/permutations.hpp"

namespace skyline {

Biword::Biword(std::vector<Biletter> letters) : letters_(std::move(letters)) {
  for (std::size_t r = 0; r < letters_.size(); ++r) {
    if (letters_[r].top < 1 || letters_[r].bottom < 1) {
      throw std::invalid_argument("biword letters must be positive");
    }
    if (r > 0 && letters_[r] < letters_[r - 1]) {
      throw std::invalid_argument("biword is not in lexicographic order");
    }
  }
}

Biword Biword::parse(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad biword JSON: ") + e.what());
    }
    std::vector<Biletter> letters;
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("biword JSON must be a list of [i, j] pairs");
      }
      letters.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return Biword(std::move(letters));
  }
  auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("biword text needs a '/' between rows");
  if (text.find('/', slash + 1) != std::string::npos) throw std::invalid_argument("biword text has more than one '/'");
  auto read_row = [](const std::string& row) {
    std::istringstream in(row);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad biword letter '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("bad biword letter '" + tok + "'");
      out.push_back(v);
    }
    return out;
  };
  std::vector<int> top = read_row(text.substr(0, slash));
  std::vector<int> bottom = read_row(text.substr(slash + 1));
  if (top.size() != bottom.size()) throw std::invalid_argument("biword rows differ in length");
  std::vector<Biletter> letters;
  for (std::size_t r = 0; r < top.size(); ++r) letters.push_back({top[r], bottom[r]});
  return Biword(std::move(letters));
}

std::vector<int> Biword::top_row() const {
  std::vector<int> out;
  for (const auto& b : letters_) out.push_back(b.top);
  return out;
}

std::vector<int> Biword::bottom_row() const {
  std::vector<int> out;
  for (const auto& b : letters_) out.push_back(b.bottom);
  return out;
}

int Biword::max_letter() const {
  int m = 0;
  for (const auto& b : letters_) m = std::max({m, b.top, b.bottom});
  return m;
}

void Biword::require_alphabet(int n) const {
  if (max_letter() > n) {
    throw std::invalid_argument("biword letter exceeds alphabet size " + std::to_string(n));
  }
}

std::string Biword::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < letters_.size(); ++r) out << (r ? " " : "") << letters_[r].top;
  out << (letters_.empty() ? "/" : " /");
  for (const auto& b : letters_) out << ' ' << b.bottom;
  return out.str();
}

Biword from_multiset(std::vector<std::pair<int, int>> cells, int n) {
  std::vector<Biletter> letters;
  for (const auto& [i, j] : cells) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("multiset entry outside [n]");
    letters.push_back({i, j});
  }
  std::sort(letters.begin(), letters.end());
  return Biword(std::move(letters));
}

TableauPair rsk(const Biword& w, int n) {
  w.require_alphabet(n);
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
  for (const auto& [i, j] : w) {
    int x = j;
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(i);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  return {Tableau(std::move(p), n), Tableau(std::move(q), n)};
}

Biword rsk_inverse(const Tableau& p_in, const Tableau& q_in) {
  if (p_in.column_lengths() != q_in.column_lengths() || p_in.num_rows() != q_in.num_rows()) {
    throw std::invalid_argument("rsk_inverse: P and Q have different shapes");
  }
  auto p = p_in.rows();
  auto q = q_in.rows();
  std::vector<Biletter> out;
  while (!q.empty()) {
    // Largest entry of Q; among equals the rightmost, which sits at a row end.
    std::size_t best_row = 0;
    int best = 0;
    for (std::size_t r = 0; r < q.size(); ++r) {
      int v = q[r].back();
      if (v > best || (v == best && q[r].size() > q[best_row].size())) {
        best = v;
        best_row = r;
      }
    }
    int x = p[best_row].back();
    p[best_row].pop_back();
    q[best_row].pop_back();
    for (std::size_t r = best_row; r-- > 0;) {
      auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
      --it;  // rightmost entry strictly less than x
      std::swap(x, *it);
    }
    if (p[best_row].empty()) {
      p.pop_back();
      q.pop_back();
    }
    out.push_back({best, x});
  }
  std::reverse(out.begin(), out.end());
  return Biword(std::move(out));
}

namespace {

WeakComposition heights(const std::vector<std::vector<int>>& cols) {
  std::vector<int> h;
  for (const auto& col : cols) h.push_back(static_cast<int>(col.size()));
  return WeakComposition(std::move(h));
}

// Places i in G at height h and returns the column used.
int place_in_g(std::vector<std::vector<int>>& g, int i, int h) {
  const int n = static_cast<int>(g.size());
  if (h == 1) {
    if (!g[i - 1].empty()) throw std::logic_error("phi: basement column of G already occupied");
    g[i - 1].push_back(i);
    return i;
  }
  for (int c = 1; c <= n; ++c) {
    auto& col = g[c - 1];
    if (static_cast<int>(col.size()) == h - 1 && col.back() >= i) {
      col.push_back(i);
      return c;
    }
  }
  throw std::logic_error("phi: no column of G can receive the recording letter");
}

template <typename OnStep>
SsafPair run_phi(const Biword& w, int n, OnStep&& on_step) {
  if (n < 0) throw std::invalid_argument("negative basement size");
  w.require_alphabet(n);
  Ssaf f(n);
  std::vector<std::vector<int>> g(n);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    InsertionResult ins = insert(it->bottom, f);
    f = std::move(ins.filling);
    int gc = place_in_g(g, it->top, ins.height);
    if (f.shape().sorted_decreasing() != heights(g).sorted_decreasing()) {
      throw std::logic_error("phi: shapes of F and G stopped being rearrangements");
    }
    on_step(*it, ins.height, ins.column, gc, f, g);
  }
  return {f, detail::make_ssaf_unchecked(std::move(g))};
}

}  // namespace

SsafPair phi(const Biword& w, int n) {
  return run_phi(w, n, [](auto&&...) {});
}

std::vector<PhiStep> phi_trace(const Biword& w, int n) {
  std::vector<PhiStep> steps;
  run_phi(w, n, [&](const Biletter& b, int h, int fc, int gc, const Ssaf& f,
                    const std::vector<std::vector<int>>& g) {
    steps.push_back({b, h, fc, gc, f, detail::make_ssaf_unchecked(g)});
  });
  return steps;
}

Biword phi_inverse(const Ssaf& f_in, const Ssaf& g_in) {
  if (f_in.rank() != g_in.rank()) throw std::invalid_argument("phi_inverse: F and G have different ranks");
  if (f_in.shape().sorted_decreasing() != g_in.shape().sorted_decreasing()) {
    throw std::invalid_argument("phi_inverse: shapes of F and G are not rearrangements");
  }
  const int n = f_in.rank();
  Ssaf f = f_in;
  std::vector<std::vector<int>> g = g_in.columns();
  std::vector<Biletter> out;
  while (f.size() > 0) {
    // The last placement is the smallest top letter; among equal letters the
    // highest cell, leftmost on ties.
    int best_col = 0;
    for (int c = 1; c <= n; ++c) {
      const auto& col = g[c - 1];
      if (col.empty()) continue;
      if (best_col == 0) {
        best_col = c;
        continue;
      }
      const auto& best = g[best_col - 1];
      if (col.back() < best.back() || (col.back() == best.back() && col.size() > best.size())) {
        best_col = c;
      }
    }
    const int i = g[best_col - 1].back();
    const int h = static_cast<int>(g[best_col - 1].size());
    g[best_col - 1].pop_back();
    const int fc = rightmost_column_of_height(f, h);
    if (fc == 0) throw std::invalid_argument("phi_inverse: pair is not in the image of phi");
    UninsertionResult u = uninsert(f, fc);
    f = std::move(u.filling);
    out.push_back({i, u.letter});
  }
  std::sort(out.begin(), out.end());
  Biword w(std::move(out));
  if (phi(w, n) != SsafPair{f_in, g_in}) {
    throw std::invalid_argument("phi_inverse: pair is not in the image of phi");
  }
  return w;
}

bool rsk_commutes_check(const Biword& w, int n) {
  TableauPair pq = rsk(w, n);
  SsafPair fg = phi(w, n);
  return psi(pq.p) == fg.f && psi(pq.q) == fg.g;
}

TheoremSides main_theorem_predicate(const Biword& w, int n) {
  TheoremSides sides;
  sides.lhs = std::all_of(w.begin(), w.end(), [n](const Biletter& b) { return b.top + b.bottom <= n + 1; });
  SsafPair fg = phi(w, n);
  sides.rhs = orbit_bruhat_leq(fg.g.shape(), fg.f.shape().reversed());
  return sides;
}

bool alphabet_support_check(const Biword& w, int n, int k, int m) {
  if (k < 0 || m < 0 || k > n || m > n) throw std::invalid_argument("alphabet bounds outside [0, n]");
  for (const auto& b : w) {
    if (b.top > k || b.bottom > m) throw std::invalid_argument("biword letters exceed the stated alphabets");
  }
  SsafPair fg = phi(w, n);
  for (int j = k + 1; j <= n; ++j) {
    if (fg.g.height(j) != 0) return false;
  }
  for (int j = m + 1; j <= n; ++j) {
    if (fg.f.height(j) != 0) return false;
  }
  return true;
}

Biword swap_rows(const Biword& w) {
  std::vector<Biletter> letters;
  for (const auto& b : w) letters.push_back({b.bottom, b.top});
  std::sort(letters.begin(), letters.end());
  return Biword(std::move(letters));
}

namespace {

template <typename Fn>
void for_each_multiset(int n, int length, int first_min, int first_max, Fn&& fn) {
  // Cells are numbered 0..n*n-1 in lexicographic order of (i, j).
  std::vector<int> idx(length, 0);
  std::vector<Biletter> letters(length);
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == length) {
      fn(letters);
      return;
    }
    int hi = n * n - 1;
    if (pos == 0) {
      lo = std::max(lo, first_min);
      hi = std::min(hi, first_max);
    }
    for (int c = lo; c <= hi; ++c) {
      letters[pos] = {c / n + 1, c % n + 1};
      self(self, pos + 1, c);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<Biword> enumerate_biwords(int n, int length) {
  std::vector<Biword> out;
  for_each_multiset(n, length, 0, n * n - 1,
                    [&](const std::vector<Biletter>& letters) { out.emplace_back(letters); });
  return out;
}

MainTheoremReport verify_main_theorem(int n, int max_length, int jobs) {
  if (n < 1 || max_length < 0) throw std::invalid_argument("verify_main_theorem: bad parameters");
  jobs = std::max(1, jobs);
  MainTheoremReport report;
  report.n = n;
  report.max_length = max_length;

  auto check = [n](const Biword& w, MainTheoremReport& r) {
    TheoremSides s = main_theorem_predicate(w, n);
    ++r.checked;
    if (s.lhs) ++r.inside_staircase;
    if (s.lhs != s.rhs) {
      ++r.failures;
      if (!r.first_failure) r.first_failure = w;
    }
  };
  check(Biword(), report);

  // Shard by the first biletter; shards are merged in order so the first
  // failure does not depend on the number of jobs.
  const int shards = n * n;
  auto run_shard = [&](int s) {
    MainTheoremReport r;
    for (int len = 1; len <= max_length; ++len) {
      for_each_multiset(n, len, s, s, [&](const std::vector<Biletter>& letters) {
        check(Biword(letters), r);
      });
    }
    return r;
  };
  std::vector<MainTheoremReport> partial(shards);
  if (jobs == 1) {
    for (int s = 0; s < shards; ++s) partial[s] = run_shard(s);
  } else {
    for (int base = 0; base < shards; base += jobs) {
      std::vector<std::future<MainTheoremReport>> futures;
      for (int s = base; s < std::min(shards, base + jobs); ++s) {
        futures.push_back(std::async(std::launch::async, run_shard, s));
      }
      for (int s = base; s < std::min(shards, base + jobs); ++s) partial[s] = futures[s - base].get();
    }
  }
  for (const auto& r : partial) {
    report.checked += r.checked;
    report.inside_staircase += r.inside_staircase;
    report.failures += r.failures;
    if (!report.first_failure && r.first_failure) report.first_failure = r.first_failure;
  }
  return report;
}

}  // namespace skyline
