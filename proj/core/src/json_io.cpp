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

#include "skyline/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace skyline {

namespace {

template <typename T>
T get_or_throw(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(std::string("missing JSON field '") + name + "'");
  }
  return j.at(name);
}

json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer string in JSON");
    }
  }
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

}  // namespace

void to_json(json& j, const WeakComposition& c) { j = c.entries(); }

void from_json(const json& j, WeakComposition& c) {
  c = WeakComposition(get_or_throw<std::vector<int>>(j, "weak composition"));
}

void to_json(json& j, const Partition& p) { j = p.composition().entries(); }

void from_json(const json& j, Partition& p) { p = Partition(get_or_throw<std::vector<int>>(j, "partition")); }

void to_json(json& j, const Permutation& p) { j = p.one_line(); }

void from_json(const json& j, Permutation& p) {
  p = Permutation(get_or_throw<std::vector<int>>(j, "permutation"));
}

void to_json(json& j, const Tableau& t) {
  j = json{{"n", t.alphabet()}, {"shape", t.shape().composition().entries()}, {"rows", t.rows()}};
}

void from_json(const json& j, Tableau& t) {
  auto rows = get_or_throw<std::vector<std::vector<int>>>(field(j, "rows"), "tableau rows");
  int n = 0;
  if (j.contains("n")) {
    n = get_or_throw<int>(j.at("n"), "tableau n");
  } else {
    for (const auto& row : rows) {
      for (int v : row) n = std::max(n, v);
    }
  }
  Tableau decoded(rows, n);
  if (j.contains("shape")) {
    auto shape = get_or_throw<std::vector<int>>(j.at("shape"), "tableau shape");
    std::vector<int> lengths;
    for (int s : shape) {
      if (s > 0) lengths.push_back(s);
    }
    std::vector<int> actual;
    for (const auto& row : decoded.rows()) actual.push_back(static_cast<int>(row.size()));
    if (lengths != actual) throw std::invalid_argument("tableau shape does not match its rows");
  }
  t = std::move(decoded);
}

void to_json(json& j, const Ssaf& f) { j = json{{"n", f.rank()}, {"columns", f.columns()}}; }

void from_json(const json& j, Ssaf& f) {
  auto cols = get_or_throw<std::vector<std::vector<int>>>(field(j, "columns"), "SSAF columns");
  if (j.contains("n") && get_or_throw<int>(j.at("n"), "SSAF n") != static_cast<int>(cols.size())) {
    throw std::invalid_argument("SSAF n does not match the number of columns");
  }
  f = Ssaf::from_columns(std::move(cols));
}

void to_json(json& j, const Biword& w) {
  j = json::array();
  for (const auto& b : w) j.push_back({b.top, b.bottom});
}

void from_json(const json& j, Biword& w) { w = Biword::parse(j.dump()); }

void to_json(json& j, const Polynomial& p) {
  j = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term{{"coeff", integer_to_json(c)}, {"x_exp", e.x}};
    if (p.two_alphabets()) term["y_exp"] = e.y;
    j.push_back(std::move(term));
  }
}

Polynomial polynomial_from_json(const json& j, int nx, int ny) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  if (!j.empty()) {
    nx = static_cast<int>(field(j[0], "x_exp").size());
    ny = j[0].contains("y_exp") ? static_cast<int>(j[0].at("y_exp").size()) : -1;
  }
  if (nx < 0) throw std::invalid_argument("cannot infer the arity of an empty polynomial");
  Polynomial p = ny >= 0 ? Polynomial(nx, ny) : Polynomial(nx);
  for (const auto& term : j) {
    Exponent e;
    e.x = get_or_throw<std::vector<int>>(field(term, "x_exp"), "x_exp");
    if (term.contains("y_exp")) e.y = get_or_throw<std::vector<int>>(term.at("y_exp"), "y_exp");
    p.add_term(e, integer_from_json(field(term, "coeff")));
  }
  return p;
}

json report_to_json(const ExpansionReport& r) {
  json j{{"n", r.instance.n},
         {"m", r.instance.m},
         {"k", r.instance.k},
         {"lambda", r.instance.lambda},
         {"degree", r.degree},
         {"equal", r.equal},
         {"lhs_terms", r.lhs.num_terms()},
         {"rhs_terms", r.rhs.num_terms()},
         {"lhs", r.lhs},
         {"rhs", r.rhs}};
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"x_exp", r.first_mismatch->x},
                           {"y_exp", r.first_mismatch->y},
                           {"lhs_coeff", integer_to_json(r.lhs_coefficient)},
                           {"rhs_coeff", integer_to_json(r.rhs_coefficient)}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

json report_to_json(const MainTheoremReport& r) {
  json j{{"n", r.n},
         {"max_length", r.max_length},
         {"checked", r.checked},
         {"inside_staircase", r.inside_staircase},
         {"failures", r.failures},
         {"ok", r.ok()}};
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  return j;
}

}  // namespace skyline
