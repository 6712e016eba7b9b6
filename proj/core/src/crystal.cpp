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

#include "skyline/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "skyline/permutations.hpp"

namespace skyline {

namespace {

struct Unmatched {
  std::vector<std::size_t> closers;  // positions of unmatched i
  std::vector<std::size_t> openers;  // positions of unmatched i+1
};

Unmatched bracket(const std::vector<int>& word, int i) {
  Unmatched u;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] == i + 1) {
      u.openers.push_back(p);
    } else if (word[p] == i) {
      if (!u.openers.empty()) {
        u.openers.pop_back();
      } else {
        u.closers.push_back(p);
      }
    }
  }
  return u;
}

void check_color(int i, const Tableau& t) {
  if (i < 1 || i >= t.alphabet()) throw std::out_of_range("crystal operator index out of range");
}

}  // namespace

std::optional<Tableau> f_op(int i, const Tableau& t) {
  check_color(i, t);
  std::vector<int> word = t.column_word();
  Unmatched u = bracket(word, i);
  if (u.closers.empty()) return std::nullopt;
  word[u.closers.back()] = i + 1;
  return Tableau::from_column_word(word, t.column_lengths(), t.alphabet());
}

std::optional<Tableau> e_op(int i, const Tableau& t) {
  check_color(i, t);
  std::vector<int> word = t.column_word();
  Unmatched u = bracket(word, i);
  if (u.openers.empty()) return std::nullopt;
  word[u.openers.front()] = i;
  return Tableau::from_column_word(word, t.column_lengths(), t.alphabet());
}

CrystalGraph::CrystalGraph(Partition lambda, int n, std::vector<Tableau> vertices)
    : lambda_(std::move(lambda)), n_(n), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t v = 0; v < vertices_.size(); ++v) index_.emplace(vertices_[v], static_cast<int>(v));
  const int colors = std::max(0, n - 1);
  f_.assign(colors, std::vector<int>(vertices_.size(), -1));
  e_.assign(colors, std::vector<int>(vertices_.size(), -1));
  for (int i = 1; i <= colors; ++i) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (auto t = f_op(i, vertices_[v])) {
        int w = index_of(*t);
        if (w < 0) throw std::logic_error("crystal graph is not closed under f_i");
        if (e_[i - 1][w] != -1) throw std::logic_error("crystal graph has in-degree above one");
        f_[i - 1][v] = w;
        e_[i - 1][w] = static_cast<int>(v);
      }
    }
  }
}

int CrystalGraph::index_of(const Tableau& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? -1 : it->second;
}

std::vector<CrystalEdge> CrystalGraph::edges() const {
  std::vector<CrystalEdge> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (int i = 1; i <= static_cast<int>(f_.size()); ++i) {
      if (f_[i - 1][v] >= 0) out.push_back({static_cast<int>(v), i, f_[i - 1][v]});
    }
  }
  return out;
}

CrystalGraph crystal_graph(const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("crystal_graph: shape has more than n rows");
  std::set<Tableau> seen;
  std::deque<Tableau> queue;
  Tableau y = yamanouchi(lambda, n);
  seen.insert(y);
  queue.push_back(y);
  while (!queue.empty()) {
    Tableau t = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      if (auto next = f_op(i, t)) {
        if (seen.insert(*next).second) queue.push_back(*next);
      }
    }
  }
  return CrystalGraph(lambda.padded(std::max<std::size_t>(lambda.size(), n)), n,
                      std::vector<Tableau>(seen.begin(), seen.end()));
}

std::set<Tableau> demazure_crystal_along(const Partition& lambda, const std::vector<int>& word) {
  const int n = static_cast<int>(lambda.size());
  std::set<Tableau> current{yamanouchi(lambda, n)};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    std::set<Tableau> next;
    for (const Tableau& t : current) {
      if (e_op(i, t)) continue;
      std::optional<Tableau> s = t;
      while (s) {
        next.insert(*s);
        s = f_op(i, *s);
      }
    }
    current = std::move(next);
  }
  return current;
}

DemazureCrystal demazure_crystal(const WeakComposition& alpha) {
  Partition lambda(alpha.sorted_decreasing());
  ReducedWord w = reduced_word(min_coset_rep(alpha));
  return {alpha, demazure_crystal_along(lambda, w.letters())};
}

std::set<Tableau> atom_set(const WeakComposition& alpha) {
  std::set<Tableau> out = demazure_crystal(alpha).members;
  for (const WeakComposition& beta : orbit(alpha)) {
    if (beta == alpha || !orbit_bruhat_leq(beta, alpha)) continue;
    for (const Tableau& t : demazure_crystal(beta).members) out.erase(t);
  }
  return out;
}

std::vector<std::vector<int>> string_decomposition(const CrystalGraph& g, int i) {
  if (i < 1 || i >= g.rank()) throw std::out_of_range("string color out of range");
  std::vector<std::vector<int>> out;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    if (g.e_target(v, i) != -1) continue;
    std::vector<int> s;
    for (int w = v; w != -1; w = g.f_target(w, i)) s.push_back(w);
    out.push_back(std::move(s));
  }
  return out;
}

std::set<Tableau> bounded_entry_restriction(const std::set<Tableau>& b, int m) {
  std::set<Tableau> out;
  for (const Tableau& t : b) {
    bool ok = true;
    for (const auto& row : t.rows()) {
      if (!row.empty() && row.back() > m) ok = false;
    }
    if (ok) out.insert(t);
  }
  return out;
}

Polynomial weight_polynomial(const std::set<Tableau>& tableaux, int n) {
  Polynomial out(n);
  for (const Tableau& t : tableaux) out.add_term({t.content().entries(), {}}, 1);
  return out;
}

std::string word_label(const Tableau& t) {
  std::ostringstream out;
  const std::vector<int> word = t.column_word();
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (t.alphabet() > 9 && p) out << '.';
    out << word[p];
  }
  return out.str();
}

std::string export_graph(const CrystalGraph& g, const std::string& format) {
  static const char* kPalette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  if (format == "dot") {
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (std::size_t v = 0; v < g.size(); ++v) {
      out << "  v" << v << " [label=\"" << word_label(g.vertices()[v]) << "\"];\n";
    }
    for (const CrystalEdge& e : g.edges()) {
      out << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.color << "\", color=\""
          << kPalette[(e.color - 1) % 8] << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }
  if (format == "json") {
    nlohmann::json j;
    j["n"] = g.rank();
    j["shape"] = g.shape().composition().entries();
    j["vertices"] = nlohmann::json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
      j["vertices"].push_back({{"id", v}, {"word", word_label(g.vertices()[v])}, {"rows", g.vertices()[v].rows()}});
    }
    j["edges"] = nlohmann::json::array();
    for (const CrystalEdge& e : g.edges()) j["edges"].push_back({e.source, e.color, e.target});
    return j.dump(2) + "\n";
  }
  throw std::invalid_argument("unsupported graph format '" + format + "'");
}

}  // namespace skyline
