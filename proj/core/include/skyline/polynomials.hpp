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

#ifndef SKYLINE_POLYNOMIALS_HPP_
#define SKYLINE_POLYNOMIALS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skyline/shapes.hpp"

namespace skyline {

using Integer = boost::multiprecision::cpp_int;

// Exponent of a monomial x^x y^y. For a one-alphabet polynomial y is empty.
struct Exponent {
  std::vector<int> x;
  std::vector<int> y;

  int x_degree() const;
  int y_degree() const;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Graded lexicographic order: total degree first, then x, then y.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

// Sparse polynomial with integer coefficients in x_1..x_nx, optionally also
// in a second alphabet y_1..y_ny. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Integer, GradedLexLess>;

  // The zero polynomial in one alphabet of size nx.
  explicit Polynomial(int nx = 0);
  // The zero polynomial in two alphabets.
  Polynomial(int nx, int ny);

  static Polynomial constant(int nx, const Integer& c);
  static Polynomial constant(int nx, int ny, const Integer& c);
  static Polynomial monomial(const WeakComposition& x, const Integer& c = 1);
  static Polynomial monomial(const WeakComposition& x, const WeakComposition& y,
                             const Integer& c = 1);
  // Product p(x) q(y) of two one-alphabet polynomials.
  static Polynomial tensor(const Polynomial& px, const Polynomial& qy);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  bool two_alphabets() const { return two_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Exponent& e) const;
  // Largest x-degree among the terms; -1 for zero.
  int x_degree() const;

  // Adds c x^e; checks arity.
  void add_term(const Exponent& e, const Integer& c);

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Integer& c, const Polynomial& p);

  // Drops terms whose x-degree or y-degree exceeds d.
  Polynomial truncated(int d) const;
  // Swaps the exponents of x_i and x_{i+1} in every term.
  Polynomial s_action(int i) const;
  // Exchanges the two alphabets.
  Polynomial swap_alphabets() const;
  // Appends zero exponents so the x alphabet has size nx.
  Polynomial padded_x(int nx) const;
  // Drops the y alphabet; throws if some term has a nonzero y exponent.
  Polynomial x_only() const;

  // Terms ascending in graded lex order, e.g. "1 + x^(1,0,3) - x^(2,2,0)".
  std::string to_string() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  void check_compatible(const Polynomial& q, const char* what) const;
  void check_exponent(const Exponent& e) const;

  int nx_ = 0;
  int ny_ = 0;
  bool two_ = false;
  TermMap terms_;
};

// First exponent, in graded lex order, whose coefficients differ.
std::optional<Exponent> first_difference(const Polynomial& p, const Polynomial& q);

std::string exponent_to_string(const Exponent& e);

}  // namespace skyline

#endif  // SKYLINE_POLYNOMIALS_HPP_
