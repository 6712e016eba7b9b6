#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "oracles/printers.hpp"
#include "skyline/permutations.hpp"

namespace skyline {
namespace {

TEST(Permutation, ValidatesOneLine) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_EQ(Permutation::parse("21534"), Permutation({2, 1, 5, 3, 4}));
  EXPECT_EQ(Permutation::parse("2,1,5,3,4"), Permutation({2, 1, 5, 3, 4}));
}

TEST(Permutation, Length) {
  EXPECT_EQ(Permutation::identity(5).length(), 0);
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(Permutation::longest(n).length(), n * (n - 1) / 2);
  EXPECT_EQ(Permutation::parse("21534").length(), 3);
}

TEST(Permutation, ProductOfSimpleReflections) {
  EXPECT_EQ(word_product({1, 4, 3}, 5), Permutation::parse("21534"));
  EXPECT_TRUE(is_reduced({1, 4, 3}, 5));
  EXPECT_FALSE(is_reduced({1, 1}, 3));
  EXPECT_THROW(ReducedWord({1, 1}, 3), std::invalid_argument);
  EXPECT_THROW(ReducedWord({3}, 3), std::invalid_argument);
}

TEST(Permutation, ActionIsALeftAction) {
  WeakComposition g{3, 1, 0, 2};
  for (const auto& s : all_permutations(4)) {
    for (const auto& t : all_permutations(4)) {
      EXPECT_EQ((s * t).act(g), s.act(t.act(g)));
    }
  }
  // (s g)_{s(j)} = g_j
  Permutation s = Permutation::parse("2413");
  WeakComposition sg = s.act(g);
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(sg.at(s(j)), g.at(j));
}

TEST(ReducedWords, ProductRecoversPermutation) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& s : all_permutations(n)) {
      ReducedWord w = reduced_word(s);
      EXPECT_EQ(w.product(), s);
      EXPECT_EQ(static_cast<int>(w.size()), s.length());
    }
  }
}

TEST(Bruhat, Examples) {
  for (const auto& s : all_permutations(4)) {
    EXPECT_TRUE(bruhat_leq(Permutation::identity(4), s));
    EXPECT_TRUE(bruhat_leq(s, Permutation::longest(4)));
  }
  Permutation s1 = Permutation::simple(1, 3);
  Permutation s2 = Permutation::simple(2, 3);
  EXPECT_FALSE(bruhat_leq(s1, s2));
  EXPECT_FALSE(bruhat_leq(s2, s1));
  EXPECT_TRUE(tableau_criterion_leq(s1, s1));
  EXPECT_TRUE(tableau_criterion_leq(s1, Permutation::longest(3)));
  EXPECT_THROW(bruhat_leq(s1, Permutation::identity(4)), std::invalid_argument);
}

TEST(Bruhat, TableauCriterionMatchesSubwordProperty) {
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    for (const auto& a : perms) {
      for (const auto& b : perms) {
        ASSERT_EQ(tableau_criterion_leq(a, b), oracle::subword_bruhat_leq(a, b))
            << a.to_string() << " vs " << b.to_string();
      }
    }
  }
}

TEST(Bruhat, LongestElementIsAnAntiAutomorphism) {
  for (int n = 1; n <= 4; ++n) {
    Permutation w0 = Permutation::longest(n);
    auto perms = all_permutations(n);
    for (const auto& t : perms) {
      for (const auto& s : perms) {
        bool le = bruhat_leq(t, s);
        EXPECT_EQ(le, bruhat_leq(w0 * s, w0 * t));
        EXPECT_EQ(le, bruhat_leq(s * w0, t * w0));
      }
    }
  }
}

TEST(OrbitBruhat, Examples) {
  EXPECT_TRUE(orbit_bruhat_leq(WeakComposition({3, 2, 2, 1, 0, 0, 1}), WeakComposition({2, 0, 3, 0, 1, 2, 1})));
  EXPECT_TRUE(orbit_bruhat_leq(WeakComposition({3, 1, 0}), WeakComposition({1, 0, 3})));
  EXPECT_FALSE(orbit_bruhat_leq(WeakComposition({1, 0, 3}), WeakComposition({3, 1, 0})));
  EXPECT_THROW(orbit_bruhat_leq(WeakComposition({1, 0}), WeakComposition({1, 1})), std::invalid_argument);
}

TEST(OrbitBruhat, PartitionIsTheMinimum) {
  for (int n = 1; n <= 4; ++n) {
    for (int total = 0; total <= 5; ++total) {
      for (const auto& lambda : partitions_of(total, n)) {
        for (const auto& g : orbit(lambda)) EXPECT_TRUE(orbit_bruhat_leq(lambda, g));
      }
    }
  }
}

TEST(OrbitBruhat, KeysMatchTranspositionClosureAndEvacuation) {
  for (int n = 1; n <= 4; ++n) {
    for (int total = 0; total <= 5; ++total) {
      for (const auto& lambda : partitions_of(total, n)) {
        oracle::OrbitClosure closure(lambda);
        auto orb = orbit(lambda);
        for (const auto& a : orb) {
          for (const auto& b : orb) {
            bool le = orbit_bruhat_leq(a, b);
            ASSERT_EQ(le, closure.leq(a, b)) << a.to_string() << " " << b.to_string();
            EXPECT_EQ(le, entrywise_leq(evacuation(key_tableau(b)), evacuation(key_tableau(a))));
          }
        }
      }
    }
  }
}

TEST(MinCosetRep, Examples) {
  EXPECT_EQ(min_coset_rep(WeakComposition({1, 3, 0, 0, 1})), Permutation::parse("21534"));
  EXPECT_EQ(min_coset_rep(WeakComposition({3, 1, 1, 0})), Permutation::identity(4));
  EXPECT_EQ(min_coset_rep(WeakComposition({0, 1})), Permutation::parse("21"));
}

TEST(MinCosetRep, IsShortestInItsCoset) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : compositions_up_to(n, 4)) {
      WeakComposition plus = g.sorted_decreasing();
      Permutation w = min_coset_rep(g);
      ASSERT_EQ(w.act(plus), g);
      for (const auto& s : all_permutations(n)) {
        if (s.act(plus) == g) EXPECT_LE(w.length(), s.length());
      }
    }
  }
}

TEST(BubbleSort, Examples) {
  EXPECT_EQ(bubble_sort_op(1, WeakComposition({2, 1})), WeakComposition({1, 2}));
  EXPECT_EQ(bubble_sort_op(1, WeakComposition({1, 2})), WeakComposition({1, 2}));
  EXPECT_THROW(bubble_sort_op(2, WeakComposition({1, 2})), std::out_of_range);
  EXPECT_EQ(apply_bubble_word({}, WeakComposition({2, 1})), WeakComposition({2, 1}));
  EXPECT_EQ(apply_bubble_word({1}, WeakComposition({2, 1})), WeakComposition({1, 2}));
  // pi_2 (2,1,0) = (2,0,1), then pi_1 gives (0,2,1).
  EXPECT_EQ(apply_bubble_word({1, 2}, WeakComposition({2, 1, 0})), WeakComposition({0, 2, 1}));
}

TEST(BubbleSort, OperatorRelations) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : compositions_up_to(n, 3 * n)) {
      if (g.max_entry() > 3) continue;
      for (int i = 1; i < n; ++i) {
        EXPECT_EQ(apply_bubble_word({i, i}, g), apply_bubble_word({i}, g));
        for (int j = 1; j < n; ++j) {
          if (std::abs(i - j) > 1) EXPECT_EQ(apply_bubble_word({i, j}, g), apply_bubble_word({j, i}, g));
        }
        if (i + 1 < n) {
          EXPECT_EQ(apply_bubble_word({i, i + 1, i}, g), apply_bubble_word({i + 1, i, i + 1}, g));
        }
      }
    }
  }
}

}  // namespace
}  // namespace skyline
