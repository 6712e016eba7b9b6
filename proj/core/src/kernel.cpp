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

#include "skyline/kernel.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "skyline/demazure.hpp"

namespace skyline {

std::string KernelInstance::to_string() const {
  std::ostringstream out;
  out << "n=" << n << " m=" << m << " k=" << k << " lambda=" << lambda.to_string();
  return out.str();
}

KernelInstance make_kernel_instance(int n, int m, int k) {
  return {n, m, k, truncated_staircase(n, m, k)};
}

namespace {

void append_descending(std::vector<int>& word, int from, int to) {
  for (int s = from; s >= to; --s) word.push_back(s);
}

}  // namespace

ReducedWord sigma_se_word(int n, int m, int k) {
  truncated_staircase(n, m, k);
  if (k > m) throw std::invalid_argument("sigma_se_word requires k <= m");
  std::vector<int> word;
  for (int i = 1; i <= k - (n - m) - 1; ++i) append_descending(word, i + n - k - 1, i);
  for (int i = 0; i <= n - m; ++i) append_descending(word, m - 1, k - (n - m) + i);
  return ReducedWord(std::move(word), n);
}

ReducedWord sigma_nw_word(int n, int m, int k) {
  truncated_staircase(n, m, k);
  if (m > k) throw std::invalid_argument("sigma_nw_word requires m <= k");
  return sigma_se_word(n, k, m);
}

ReducedWord shift_word(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("shift_word requires 0 <= k <= n");
  std::vector<int> word;
  for (int i = 1; i <= k; ++i) append_descending(word, i + n - k - 1, i);
  return ReducedWord(std::move(word), n);
}

WeakComposition alpha_vector(const WeakComposition& mu, const KernelInstance& inst) {
  if (inst.k > inst.m) throw std::invalid_argument("alpha_vector requires k <= m");
  if (static_cast<int>(mu.size()) != inst.k) throw std::invalid_argument("alpha_vector: mu must have length k");
  std::vector<int> rest = mu.reversed().entries();
  std::vector<int> alpha(inst.k, 0);
  for (int i = inst.k; i >= 1; --i) {
    const int window = std::min(i, inst.n - inst.m + 1);
    auto first = rest.end() - window;
    auto best = first;
    for (auto it = first; it != rest.end(); ++it) {
      if (*it >= *best) best = it;
    }
    alpha[i - 1] = *best;
    rest.erase(best);
  }
  return WeakComposition(std::move(alpha));
}

WeakComposition alpha_via_sorting(const WeakComposition& mu, const KernelInstance& inst) {
  if (static_cast<int>(mu.size()) != inst.k) throw std::invalid_argument("alpha_via_sorting: mu must have length k");
  ReducedWord w = sigma_se_word(inst.n, inst.m, inst.k);
  return apply_bubble_word(w.letters(), mu.reversed().concat(WeakComposition::zeros(inst.n - inst.k)));
}

Polynomial kernel_lhs(const KernelInstance& inst, int d) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  const int n = inst.n;
  Polynomial result = Polynomial::constant(n, n, 1);
  for (const Cell& c : cells(inst.lambda)) {
    Polynomial series(n, n);
    for (int e = 0; e <= d; ++e) {
      Exponent t{std::vector<int>(n, 0), std::vector<int>(n, 0)};
      t.x[c.row - 1] = e;
      t.y[c.col - 1] = e;
      series.add_term(t, 1);
    }
    result = (result * series).truncated(d);
  }
  return result;
}

namespace {

Polynomial rhs_k_le_m(const KernelInstance& inst, int d, int jobs) {
  const int n = inst.n;
  const std::vector<WeakComposition> mus = compositions_up_to(inst.k, d);
  auto term = [&](const WeakComposition& mu) {
    WeakComposition alpha = WeakComposition::zeros(inst.m - inst.k).concat(alpha_vector(mu, inst));
    return Polynomial::tensor(atom(mu).padded_x(n), key_polynomial(alpha).padded_x(n));
  };
  auto chunk = [&](std::size_t begin, std::size_t end) {
    Polynomial part(n, n);
    for (std::size_t t = begin; t < end; ++t) part += term(mus[t]);
    return part;
  };
  Polynomial total(n, n);
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    total = chunk(0, mus.size());
  } else {
    std::vector<std::future<Polynomial>> futures;
    const std::size_t step = (mus.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < mus.size(); b += step) {
      futures.push_back(std::async(std::launch::async, chunk, b, std::min(mus.size(), b + step)));
    }
    for (auto& f : futures) total += f.get();
  }
  return total.truncated(d);
}

}  // namespace

Polynomial kernel_rhs(const KernelInstance& inst, int d, int jobs) {
  if (d < 0) throw std::invalid_argument("degree must be >= 0");
  if (inst.k <= inst.m) return rhs_k_le_m(inst, d, jobs);
  return rhs_k_le_m(make_kernel_instance(inst.n, inst.k, inst.m), d, jobs).swap_alphabets();
}

Polynomial classical_cauchy_rhs(const KernelInstance& inst, int d) {
  if (!inst.is_rectangle()) throw std::invalid_argument("classical_cauchy_rhs needs a rectangle");
  const int n = inst.n;
  const int rows = std::min(inst.k, inst.m);
  Polynomial total(n, n);
  for (int size = 0; size <= d; ++size) {
    for (const Partition& p : partitions_of(size, rows)) {
      Polynomial sx = schur_polynomial(p.padded(inst.k), inst.k).padded_x(n);
      Polynomial sy = schur_polynomial(p.padded(inst.m), inst.m).padded_x(n);
      total += Polynomial::tensor(sx, sy);
    }
  }
  return total;
}

ExpansionReport verify_expansion(const KernelInstance& inst, int d, int jobs) {
  ExpansionReport r;
  r.instance = inst;
  r.degree = d;
  r.lhs = kernel_lhs(inst, d);
  r.rhs = kernel_rhs(inst, d, jobs);
  r.first_mismatch = first_difference(r.lhs, r.rhs);
  r.equal = !r.first_mismatch.has_value();
  if (r.first_mismatch) {
    r.lhs_coefficient = r.lhs.coefficient(*r.first_mismatch);
    r.rhs_coefficient = r.rhs.coefficient(*r.first_mismatch);
  }
  return r;
}

}  // namespace skyline
