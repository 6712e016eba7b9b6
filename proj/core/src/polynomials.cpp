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

#include "skyline/polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skyline {

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string vec_to_string(const std::vector<int>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace

int Exponent::x_degree() const { return sum(x); }
int Exponent::y_degree() const { return sum(y); }

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = a.x_degree() + a.y_degree();
  int db = b.x_degree() + b.y_degree();
  if (da != db) return da < db;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Polynomial::Polynomial(int nx) : nx_(nx) {
  if (nx < 0) throw std::invalid_argument("negative alphabet size");
}

Polynomial::Polynomial(int nx, int ny) : nx_(nx), ny_(ny), two_(true) {
  if (nx < 0 || ny < 0) throw std::invalid_argument("negative alphabet size");
}

Polynomial Polynomial::constant(int nx, const Integer& c) {
  Polynomial p(nx);
  p.add_term({std::vector<int>(nx, 0), {}}, c);
  return p;
}

Polynomial Polynomial::constant(int nx, int ny, const Integer& c) {
  Polynomial p(nx, ny);
  p.add_term({std::vector<int>(nx, 0), std::vector<int>(ny, 0)}, c);
  return p;
}

Polynomial Polynomial::monomial(const WeakComposition& x, const Integer& c) {
  Polynomial p(static_cast<int>(x.size()));
  p.add_term({x.entries(), {}}, c);
  return p;
}

Polynomial Polynomial::monomial(const WeakComposition& x, const WeakComposition& y,
                                const Integer& c) {
  Polynomial p(static_cast<int>(x.size()), static_cast<int>(y.size()));
  p.add_term({x.entries(), y.entries()}, c);
  return p;
}

Polynomial Polynomial::tensor(const Polynomial& px, const Polynomial& qy) {
  if (px.two_ || qy.two_) throw std::invalid_argument("tensor expects one-alphabet factors");
  Polynomial out(px.nx_, qy.nx_);
  for (const auto& [ex, cx] : px.terms_) {
    for (const auto& [ey, cy] : qy.terms_) out.add_term({ex.x, ey.x}, cx * cy);
  }
  return out;
}

Integer Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int Polynomial::x_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x_degree());
  return d;
}

void Polynomial::check_exponent(const Exponent& e) const {
  if (static_cast<int>(e.x.size()) != nx_ || static_cast<int>(e.y.size()) != (two_ ? ny_ : 0)) {
    throw std::invalid_argument("exponent does not match polynomial arity");
  }
  for (int v : e.x) {
    if (v < 0) throw std::invalid_argument("negative exponent");
  }
  for (int v : e.y) {
    if (v < 0) throw std::invalid_argument("negative exponent");
  }
}

void Polynomial::check_compatible(const Polynomial& q, const char* what) const {
  if (nx_ != q.nx_ || two_ != q.two_ || ny_ != q.ny_) {
    throw std::invalid_argument(std::string(what) + ": polynomial arity mismatch");
  }
}

void Polynomial::add_term(const Exponent& e, const Integer& c) {
  check_exponent(e);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  check_compatible(q, "add");
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  check_compatible(q, "subtract");
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator-(const Polynomial& p) {
  Polynomial out = p;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.check_compatible(q, "multiply");
  Polynomial out = p.two_ ? Polynomial(p.nx_, p.ny_) : Polynomial(p.nx_);
  for (const auto& [ep, cp] : p.terms_) {
    for (const auto& [eq, cq] : q.terms_) {
      Exponent e = ep;
      for (std::size_t i = 0; i < e.x.size(); ++i) e.x[i] += eq.x[i];
      for (std::size_t i = 0; i < e.y.size(); ++i) e.y[i] += eq.y[i];
      out.add_term(e, cp * cq);
    }
  }
  return out;
}

Polynomial operator*(const Integer& c, const Polynomial& p) {
  Polynomial out = p.two_ ? Polynomial(p.nx_, p.ny_) : Polynomial(p.nx_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : p.terms_) out.terms_.emplace(e, c * coeff);
  return out;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  return p.nx_ == q.nx_ && p.ny_ == q.ny_ && p.two_ == q.two_ && p.terms_ == q.terms_;
}

Polynomial Polynomial::truncated(int d) const {
  if (d < 0) throw std::invalid_argument("truncation degree must be >= 0");
  Polynomial out = *this;
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (it->first.x_degree() > d || it->first.y_degree() > d) {
      it = out.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

Polynomial Polynomial::s_action(int i) const {
  if (i < 1 || i >= nx_) throw std::out_of_range("s_action index out of range");
  Polynomial out = two_ ? Polynomial(nx_, ny_) : Polynomial(nx_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f.x[i - 1], f.x[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::swap_alphabets() const {
  if (!two_) throw std::invalid_argument("swap_alphabets needs a two-alphabet polynomial");
  Polynomial out(ny_, nx_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.y, e.x}, c);
  return out;
}

Polynomial Polynomial::padded_x(int nx) const {
  if (nx < nx_) throw std::invalid_argument("padded_x cannot shrink the alphabet");
  Polynomial out = two_ ? Polynomial(nx, ny_) : Polynomial(nx);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.x.resize(nx, 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::x_only() const {
  if (!two_) return *this;
  Polynomial out(nx_);
  for (const auto& [e, c] : terms_) {
    if (e.y_degree() != 0) throw std::invalid_argument("x_only: term involves y");
    out.terms_.emplace(Exponent{e.x, {}}, c);
  }
  return out;
}

std::string exponent_to_string(const Exponent& e) {
  std::string s = "x^" + vec_to_string(e.x);
  if (!e.y.empty()) s += "*y^" + vec_to_string(e.y);
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e.x_degree() == 0 && e.y_degree() == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << exponent_to_string(e);
    }
    first = false;
  }
  return out.str();
}

std::optional<Exponent> first_difference(const Polynomial& p, const Polynomial& q) {
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  GradedLexLess less;
  while (a != p.terms().end() || b != q.terms().end()) {
    if (b == q.terms().end() || (a != p.terms().end() && less(a->first, b->first))) return a->first;
    if (a == p.terms().end() || less(b->first, a->first)) return b->first;
    if (a->second != b->second) return a->first;
    ++a;
    ++b;
  }
  return std::nullopt;
}

}  // namespace skyline
