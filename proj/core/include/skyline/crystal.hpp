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

#ifndef SKYLINE_CRYSTAL_HPP_
#define SKYLINE_CRYSTAL_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skyline/polynomials.hpp"
#include "skyline/shapes.hpp"
#include "skyline/tableaux.hpp"

namespace skyline {

// Crystal operators by bracketing the column word: each i closes, each i+1
// opens. f_i turns the rightmost unmatched i into i+1, e_i turns the
// leftmost unmatched i+1 into i. Both return nullopt when nothing is unmatched.
std::optional<Tableau> f_op(int i, const Tableau& t);
std::optional<Tableau> e_op(int i, const Tableau& t);

struct CrystalEdge {
  int source = 0;
  int color = 0;
  int target = 0;
  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

// The crystal graph on SSYT of shape lambda over [n]. Vertices are sorted.
class CrystalGraph {
 public:
  CrystalGraph() = default;
  CrystalGraph(Partition lambda, int n, std::vector<Tableau> vertices);

  const Partition& shape() const { return lambda_; }
  int rank() const { return n_; }
  const std::vector<Tableau>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // -1 when t is not a vertex.
  int index_of(const Tableau& t) const;
  // Target of the i-arrow out of v, or -1.
  int f_target(int v, int i) const { return f_[i - 1][v]; }
  int e_target(int v, int i) const { return e_[i - 1][v]; }
  std::vector<CrystalEdge> edges() const;

 private:
  Partition lambda_;
  int n_ = 0;
  std::vector<Tableau> vertices_;
  std::map<Tableau, int> index_;
  std::vector<std::vector<int>> f_;
  std::vector<std::vector<int>> e_;
};

// Generated from the Yamanouchi tableau by the f_i.
CrystalGraph crystal_graph(const Partition& lambda, int n);

struct DemazureCrystal {
  WeakComposition alpha;
  std::set<Tableau> members;
};

// B_alpha built along the leftmost-descent reduced word of min_coset_rep(alpha).
DemazureCrystal demazure_crystal(const WeakComposition& alpha);
// Starting from {Yamanouchi of lambda}, saturates i-strings for each letter of
// `word`, rightmost first.
std::set<Tableau> demazure_crystal_along(const Partition& lambda, const std::vector<int>& word);

// B_alpha minus the union of B_beta over beta < alpha in the orbit.
std::set<Tableau> atom_set(const WeakComposition& alpha);

// Maximal i-paths, each listed from its head.
std::vector<std::vector<int>> string_decomposition(const CrystalGraph& g, int i);

// Members whose entries are all at most m.
std::set<Tableau> bounded_entry_restriction(const std::set<Tableau>& b, int m);

// Sum of x^content over the given tableaux.
Polynomial weight_polynomial(const std::set<Tableau>& tableaux, int n);

// "dot" or "json"; throws std::invalid_argument for anything else.
std::string export_graph(const CrystalGraph& g, const std::string& format);

// Column word as a label: digits for n <= 9, dot separated otherwise.
std::string word_label(const Tableau& t);

}  // namespace skyline

#endif  // SKYLINE_CRYSTAL_HPP_
