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

#include "skyline/demazure.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "skyline/permutations.hpp"
#include "skyline/skyline.hpp"
#include "skyline/tableaux.hpp"

namespace skyline {

Polynomial pi(int i, const Polynomial& f) {
  if (i < 1 || i >= f.nx()) throw std::out_of_range("pi index out of range");
  Polynomial out = f.two_alphabets() ? Polynomial(f.nx(), f.ny()) : Polynomial(f.nx());
  for (const auto& [e, c] : f.terms()) {
    const int a = e.x[i - 1];
    const int b = e.x[i];
    Exponent t = e;
    if (a >= b) {
      // x_i^a x_{i+1}^b + ... + x_i^b x_{i+1}^a
      for (int j = 0; j <= a - b; ++j) {
        t.x[i - 1] = a - j;
        t.x[i] = b + j;
        out.add_term(t, c);
      }
    } else {
      // -(x_i^{a+1} x_{i+1}^{b-1} + ... + x_i^{b-1} x_{i+1}^{a+1})
      for (int j = 1; j <= b - a - 1; ++j) {
        t.x[i - 1] = a + j;
        t.x[i] = b - j;
        out.add_term(t, -c);
      }
    }
  }
  return out;
}

Polynomial pihat(int i, const Polynomial& f) { return pi(i, f) - f; }

Polynomial apply_op(const DemazureOp& op, const Polynomial& f) {
  return op.kind == OpKind::kPi ? pi(op.index, f) : pihat(op.index, f);
}

Polynomial apply_op_word(OpKind kind, const std::vector<int>& word, const Polynomial& f) {
  Polynomial cur = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_op({kind, *it}, cur);
  return cur;
}

Polynomial apply_op_word(const std::vector<DemazureOp>& word, const Polynomial& f) {
  Polynomial cur = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_op(*it, cur);
  return cur;
}

namespace {

class DemazureCache {
 public:
  std::optional<Polynomial> find(OpKind kind, const WeakComposition& alpha) const {
    std::shared_lock lock(mutex_);
    const auto& table = kind == OpKind::kPi ? keys_ : atoms_;
    auto it = table.find(alpha);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }

  void insert(OpKind kind, const WeakComposition& alpha, const Polynomial& p) {
    std::unique_lock lock(mutex_);
    auto& table = kind == OpKind::kPi ? keys_ : atoms_;
    table.emplace(alpha, p);
  }

  void clear() {
    std::unique_lock lock(mutex_);
    keys_.clear();
    atoms_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<WeakComposition, Polynomial> keys_;
  std::map<WeakComposition, Polynomial> atoms_;
};

DemazureCache& cache() {
  static DemazureCache instance;
  return instance;
}

Polynomial demazure_recursion(OpKind kind, const WeakComposition& alpha) {
  if (auto hit = cache().find(kind, alpha)) return *hit;
  Polynomial result;
  int ascent = 0;
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    if (alpha[i] > alpha[i - 1]) {
      ascent = static_cast<int>(i);
      break;
    }
  }
  if (ascent == 0) {
    result = Polynomial::monomial(alpha);
  } else {
    result = apply_op({kind, ascent}, demazure_recursion(kind, alpha.swapped(ascent)));
  }
  cache().insert(kind, alpha, result);
  return result;
}

}  // namespace

Polynomial key_polynomial(const WeakComposition& alpha) {
  return demazure_recursion(OpKind::kPi, alpha);
}

Polynomial atom(const WeakComposition& alpha) { return demazure_recursion(OpKind::kPiHat, alpha); }

void clear_demazure_cache() { cache().clear(); }

Polynomial atom_via_ssaf(const WeakComposition& alpha) {
  Polynomial out(static_cast<int>(alpha.size()));
  for (const Ssaf& f : enumerate_ssaf(alpha)) out.add_term({f.content().entries(), {}}, 1);
  return out;
}

Polynomial key_via_ssaf(const WeakComposition& alpha) {
  Polynomial out(static_cast<int>(alpha.size()));
  for (const WeakComposition& beta : orbit(alpha)) {
    if (orbit_bruhat_leq(beta, alpha)) out += atom_via_ssaf(beta);
  }
  return out;
}

Polynomial schur_polynomial(const Partition& lambda, int n) {
  Polynomial out(n);
  for_each_ssyt(lambda, n, [&](const Tableau& t) { out.add_term({t.content().entries(), {}}, 1); });
  return out;
}

}  // namespace skyline
