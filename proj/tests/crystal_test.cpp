#include <algorithm>

#include <gtest/gtest.h>

#include "oracles/printers.hpp"
#include "skyline/crystal.hpp"
#include "skyline/demazure.hpp"
#include "skyline/permutations.hpp"
#include "skyline/skyline.hpp"

namespace skyline {
namespace {

std::vector<WeakComposition> orbit_of(const Partition& lambda, int n) { return orbit(lambda.padded(n)); }

template <typename Fn>
void for_range(int max_n, int max_size, Fn fn) {
  for (int n = 1; n <= max_n; ++n) {
    for (int s = 0; s <= max_size; ++s) {
      for (const auto& lambda : partitions_of(s, n)) fn(n, Partition(lambda));
    }
  }
}

TEST(CrystalOps, Examples) {
  Tableau y = yamanouchi(Partition({3, 1, 0}), 3);
  std::optional<Tableau> f = f_op(1, y);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->content(), WeakComposition({2, 2, 0}));
  for (int i = 1; i < 3; ++i) EXPECT_FALSE(e_op(i, y).has_value());
  EXPECT_EQ(e_op(1, *f), y);
  // The 1-string through the Yamanouchi tableau of (3,1) has length 3.
  std::optional<Tableau> ff = f_op(1, *f);
  ASSERT_TRUE(ff.has_value());
  EXPECT_EQ(ff->content(), WeakComposition({1, 3, 0}));
  EXPECT_FALSE(f_op(1, *ff).has_value());
  EXPECT_TRUE(f_op(2, y).has_value());
  EXPECT_FALSE(f_op(2, *f_op(2, y)).has_value());
}

TEST(CrystalOps, InverseOnShape21) {
  for (const auto& t : enumerate_ssyt(Partition({2, 1, 0}), 3)) {
    for (int i = 1; i < 3; ++i) {
      if (auto f = f_op(i, t)) {
        EXPECT_EQ(e_op(i, *f), t);
        std::vector<int> c = t.content().entries();
        --c[i - 1];
        ++c[i];
        EXPECT_EQ(f->content(), WeakComposition(c));
      }
      if (auto e = e_op(i, t)) EXPECT_EQ(f_op(i, *e), t);
    }
  }
}

TEST(CrystalGraph, Sizes) {
  CrystalGraph g = crystal_graph(Partition({3, 1, 0}), 3);
  EXPECT_EQ(g.size(), 15u);
  EXPECT_EQ(g.size(), enumerate_ssyt(Partition({3, 1, 0}), 3).size());
  CrystalGraph p = crystal_graph(Partition({1, 0}), 2);
  ASSERT_EQ(p.size(), 2u);
  ASSERT_EQ(p.edges().size(), 1u);
  EXPECT_EQ(p.edges()[0].color, 1);
  std::vector<std::vector<int>> strings = string_decomposition(p, 1);
  ASSERT_EQ(strings.size(), 1u);
  EXPECT_EQ(strings[0].size(), 2u);
  EXPECT_EQ(crystal_graph(Partition({0, 0}), 2).size(), 1u);
}

TEST(CrystalGraph, CoversAllTableaux) {
  for_range(4, 5, [](int n, const Partition& lambda) {
    CrystalGraph g = crystal_graph(lambda, n);
    std::vector<Tableau> all = enumerate_ssyt(lambda, n);
    std::sort(all.begin(), all.end());
    EXPECT_EQ(g.vertices(), all);
    EXPECT_EQ(weight_polynomial(std::set<Tableau>(all.begin(), all.end()), n), schur_polynomial(lambda, n));
  });
}

TEST(Strings, DemazureOperatorIdentity) {
  CrystalGraph g = crystal_graph(Partition({3, 1, 0}), 3);
  const int y = g.index_of(yamanouchi(Partition({3, 1, 0}), 3));
  for (int i = 1; i < 3; ++i) {
    std::vector<std::vector<int>> strings = string_decomposition(g, i);
    std::size_t covered = 0;
    bool y_is_head = false;
    for (const auto& s : strings) {
      covered += s.size();
      EXPECT_EQ(g.e_target(s.front(), i), -1);
      EXPECT_EQ(g.f_target(s.back(), i), -1);
      y_is_head = y_is_head || s.front() == y;
      Polynomial head = Polynomial::monomial(g.vertices()[s.front()].content());
      std::set<Tableau> members;
      for (int v : s) members.insert(g.vertices()[v]);
      EXPECT_EQ(pi(i, head), weight_polynomial(members, 3));
    }
    EXPECT_EQ(covered, g.size());
    EXPECT_TRUE(y_is_head);
  }
}

TEST(DemazureCrystal, Examples) {
  Partition lambda({3, 1, 0});
  EXPECT_EQ(demazure_crystal(WeakComposition({3, 1, 0})).members,
            std::set<Tableau>({yamanouchi(lambda, 3)}));
  DemazureCrystal b = demazure_crystal(WeakComposition({1, 0, 3}));
  EXPECT_EQ(b.members.size(), 9u);
  EXPECT_EQ(weight_polynomial(b.members, 3), key_polynomial(WeakComposition({1, 0, 3})));
  EXPECT_EQ(atom_set(WeakComposition({1, 0, 3})).size(), 5u);
  EXPECT_EQ(atom_set(WeakComposition({3, 1, 0})), std::set<Tableau>({yamanouchi(lambda, 3)}));
  const std::vector<Tableau> all = crystal_graph(lambda, 3).vertices();
  EXPECT_EQ(demazure_crystal(WeakComposition({0, 1, 3})).members, std::set<Tableau>(all.begin(), all.end()));
}

TEST(DemazureCrystal, RoutesAgreeAndMonotone) {
  for_range(4, 5, [](int n, const Partition& lambda) {
    std::vector<WeakComposition> orb = orbit_of(lambda, n);
    std::map<WeakComposition, std::set<Tableau>> b;
    for (const auto& a : orb) b[a] = demazure_crystal(a).members;
    std::set<Tableau> all;
    for (const auto& a : orb) {
      EXPECT_EQ(weight_polynomial(b[a], n), key_polynomial(a)) << a.to_string();
      std::set<Tableau> at = atom_set(a);
      EXPECT_EQ(weight_polynomial(at, n), atom(a)) << a.to_string();
      for (const auto& t : at) EXPECT_EQ(right_key(t), key_tableau(a)) << a.to_string();
      for (const auto& c : orb) {
        if (orbit_bruhat_leq(c, a)) EXPECT_TRUE(std::includes(b[a].begin(), b[a].end(), b[c].begin(), b[c].end()));
      }
      all.insert(b[a].begin(), b[a].end());
    }
    EXPECT_EQ(all.size(), crystal_graph(lambda, n).size());
  });
}

TEST(DemazureCrystal, WordIndependence) {
  // Compare the leftmost-descent word with the rightmost-descent word.
  for_range(4, 5, [](int n, const Partition& lambda) {
    for (const auto& a : orbit_of(lambda, n)) {
      Permutation sigma = min_coset_rep(a);
      std::vector<int> word;
      Permutation cur = sigma;
      while (cur.length() > 0) {
        int i = n - 1;
        while (!cur.has_right_descent(i)) --i;
        word.insert(word.begin(), i);
        cur = cur * Permutation::simple(i, n);
      }
      ASSERT_EQ(word_product(word, n), sigma);
      EXPECT_EQ(demazure_crystal_along(lambda, word), demazure_crystal(a).members) << a.to_string();
    }
  });
}

TEST(DemazureCrystal, StringTrichotomy) {
  for_range(4, 4, [](int n, const Partition& lambda) {
    CrystalGraph g = crystal_graph(lambda, n);
    for (const auto& a : orbit_of(lambda, n)) {
      std::set<Tableau> ba = demazure_crystal(a).members;
      for (int i = 1; i < n; ++i) {
        if (a.at(i) >= a.at(i + 1)) continue;
        // s_i alpha < alpha
        std::set<Tableau> bs = demazure_crystal(a.swapped(i)).members;
        for (const auto& s : string_decomposition(g, i)) {
          std::size_t hits = 0;
          for (int v : s) hits += bs.count(g.vertices()[v]);
          const bool head_only = hits == 1 && bs.count(g.vertices()[s.front()]);
          EXPECT_TRUE(hits == 0 || hits == s.size() || head_only);
          if (head_only && s.size() > 1) {
            for (int v : s) EXPECT_TRUE(ba.count(g.vertices()[v]));
          }
        }
      }
    }
  });
}

TEST(Restriction, IntersectionExample) {
  DemazureCrystal b = demazure_crystal(WeakComposition({0, 0, 2, 1, 1}));
  EXPECT_EQ(bounded_entry_restriction(b.members, 5), b.members);
  std::set<Tableau> r = bounded_entry_restriction(b.members, 4);
  EXPECT_EQ(r, demazure_crystal(WeakComposition({0, 1, 2, 1, 0})).members);
  EXPECT_EQ(weight_polynomial(r, 5),
            apply_op_word(OpKind::kPi, {2, 1, 2, 3}, Polynomial::monomial(WeakComposition({2, 1, 1, 0, 0}))));
}

TEST(Export, Deterministic) {
  CrystalGraph p = crystal_graph(Partition({1, 0}), 2);
  std::string dot = export_graph(p, "dot");
  EXPECT_NE(dot.find("color"), std::string::npos);
  EXPECT_NE(dot.find("\"1\""), std::string::npos);
  EXPECT_NE(dot.find("\"2\""), std::string::npos);
  CrystalGraph g = crystal_graph(Partition({3, 1, 0}), 3);
  EXPECT_EQ(export_graph(g, "json"), export_graph(crystal_graph(Partition({3, 1, 0}), 3), "json"));
  EXPECT_EQ(export_graph(g, "dot"), export_graph(crystal_graph(Partition({3, 1, 0}), 3), "dot"));
  EXPECT_THROW(export_graph(g, "svg"), std::invalid_argument);
  CrystalGraph e = crystal_graph(Partition({0}), 1);
  EXPECT_EQ(e.size(), 1u);
  EXPECT_TRUE(e.edges().empty());
  EXPECT_FALSE(export_graph(e, "dot").empty());
}

}  // namespace
}  // namespace skyline
