// Copyright 2026 The treepos Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <functional>

#include "test_oracle.hpp"
#include "treepos/automaton.hpp"
#include "treepos/oracle_check.hpp"
#include "treepos/random_expr.hpp"

namespace treepos {
namespace {

using E = TreeExpr;

TEST(AlgorithmEquivalenceTest, RandomExpressions) {
  RandomExprOptions o;
  o.max_depth = 6;
  o.max_width = 8;
  RandomExprGenerator gen(51, o);
  for (int i = 0; i < 500; ++i) {
    E e = gen.next();
    auto mismatch = check_follow_agreement(e, gen.alphabet());
    ASSERT_FALSE(mismatch) << e << ": " << *mismatch;
  }
}

// The recurrences are syntactic, so they agree with each other even where 0
// makes First and Follow over-approximate the language.
TEST(AlgorithmEquivalenceTest, RandomExpressionsWithEmpty) {
  RandomExprOptions o;
  o.max_depth = 6;
  o.max_width = 8;
  o.allow_empty = true;
  RandomExprGenerator gen(52, o);
  for (int i = 0; i < 300; ++i) {
    E e = gen.next();
    auto mismatch = check_follow_agreement(e, gen.alphabet());
    ASSERT_FALSE(mismatch) << e << ": " << *mismatch;
  }
}

// Membership of every tree of depth <= 3 over a two-function alphabet,
// decided by the automaton and by the test oracle.
TEST(LanguageCorrectnessTest, ExhaustiveSmallTrees) {
  RandomExprOptions o;
  o.max_depth = 5;
  o.max_width = 4;
  o.functions = {{"f", 1}, {"g", 2}};
  RandomExprGenerator gen(53, o);
  const RankedAlphabet& sigma = gen.alphabet();
  std::vector<GroundTree> trees;
  {
    std::vector<GroundTree> d1;
    for (const auto& c : sigma.constants()) d1.emplace_back(c);
    std::vector<GroundTree> d2 = d1;
    for (const auto& t : d1) d2.emplace_back("f", std::vector<GroundTree>{t});
    for (const auto& s : d1) {
      for (const auto& t : d1) d2.emplace_back("g", std::vector<GroundTree>{s, t});
    }
    trees = d2;
    for (const auto& t : d2) {
      if (t.depth() == 2) trees.emplace_back("f", std::vector<GroundTree>{t});
    }
    for (const auto& s : d2) {
      for (const auto& t : d2) {
        if (s.depth() == 2 || t.depth() == 2) {
          trees.emplace_back("g", std::vector<GroundTree>{s, t});
        }
      }
    }
  }
  ASSERT_EQ(trees.size(), 3u + 3u + 9u + 12u + (15u * 15u - 9u));
  int non_trivial = 0;
  for (int i = 0; i < 200; ++i) {
    E e = gen.next();
    Nfta a = build_position_automaton(e, sigma);
    testing::Lang lang = testing::language(e, 3);
    non_trivial += lang.size() > 1 ? 1 : 0;
    for (const auto& t : trees) {
      ASSERT_EQ(a.accepts(t), lang.count(t) > 0) << e << " on " << t;
    }
  }
  EXPECT_GT(non_trivial, 50);
}

TEST(LanguageCorrectnessTest, CheckLanguageAgreesOnRandomExpressions) {
  RandomExprGenerator gen(54);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    E e = gen.next();
    LanguageCheck lc = check_language(e, gen.alphabet(), 4, 50000);
    ASSERT_FALSE(lc.mismatch) << e << ": " << *lc.mismatch;
    compared += lc.truncated ? 0 : 1;
  }
  EXPECT_GT(compared, 290);
}

TEST(LanguageCorrectnessTest, CountDetectsMissingTrees) {
  // A hand-broken automaton for f(a)*a that lacks the rule f(f1^1) -> f1^1.
  Nfta broken(RankedAlphabet::parse("a:0 f:1"), {"eps1", "f1^1"}, {"eps1"},
              {{"a", {}, "eps1"}, {"a", {}, "f1^1"}, {"f", {"f1^1"}, "eps1"}});
  E e = parse_expression("f(a)*a");
  Nfta good = build_position_automaton(e);
  EXPECT_TRUE(good.count_accepted(4) ==
              testing::language(e, 4).size());
  EXPECT_FALSE(broken.count_accepted(4) == good.count_accepted(4));
}

TEST(RandomExprGeneratorTest, RespectsBudgets) {
  RandomExprOptions o;
  o.max_depth = 5;
  o.max_width = 3;
  RandomExprGenerator gen(55, o);
  for (int i = 0; i < 500; ++i) {
    E e = gen.next();
    ASSERT_LE(expr_depth(e), 5);
    ASSERT_LE(measure(e).width, 3);
    ASSERT_NO_THROW(validate(e, gen.alphabet()));
  }
}

TEST(RandomExprGeneratorTest, SeedDeterminesSequence) {
  RandomExprGenerator a(7);
  RandomExprGenerator b(7);
  RandomExprGenerator c(8);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    E x = a.next();
    ASSERT_EQ(x, b.next());
    differs = differs || !(x == c.next());
  }
  EXPECT_TRUE(differs);
}

}  // namespace
}  // namespace treepos
