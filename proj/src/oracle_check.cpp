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

#include "treepos/oracle_check.hpp"

#include "treepos/automaton.hpp"
#include "treepos/language.hpp"
#include "treepos/linearize.hpp"
#include "treepos/positions.hpp"
#include "treepos/random_expr.hpp"

namespace treepos {

namespace {

std::string describe(const std::string& what, const Position& f, int k,
                     const PositionSet& expected, const PositionSet& got) {
  return what + " Follow(" + f.name() + ", " + std::to_string(k) + ") = " +
         to_string(got) + ", naive gives " + to_string(expected);
}

std::string to_decimal(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

}  // namespace

std::optional<std::string> check_follow_agreement(
    const TreeExpr& e, const RankedAlphabet& alphabet,
    const FollowFastFn& fast) {
  LinearizedExpr lin = linearize(normalize_stars(e), alphabet);
  ZpcStructure z = build_zpc(lin);
  FollowMap all = follow_all(lin);

  PositionSet first = first_naive(lin);
  if (first != disjoint_union(first0(lin), first_sup(lin))) {
    return "First differs from First0 u First+";
  }
  if (first != z.first(z.root())) return "First differs on the forest";

  for (const auto& info : lin.positions()) {
    const Position& f = info.position;
    for (int k = 1; k <= info.rank; ++k) {
      PositionSet expected = follow_naive(lin, f, k);
      PositionSet split =
          disjoint_union(last_follow(lin, f, k), follow_sup(lin, f, k));
      if (split != expected) return describe("decomposed", f, k, expected, split);
      PositionSet gamma = follow_via_gamma(z, f, k);
      if (gamma != expected) return describe("gamma", f, k, expected, gamma);
      PositionSet quick = fast ? fast(z, f, k) : follow_fast(z, f, k);
      if (quick != expected) return describe("fast", f, k, expected, quick);
      const PositionSet& improved = all.at({f, k});
      if (improved != expected) {
        return describe("improved", f, k, expected, improved);
      }
    }
  }
  return std::nullopt;
}

LanguageCheck check_language(const TreeExpr& e, const RankedAlphabet& alphabet,
                             int depth, std::size_t max_trees) {
  LanguageCheck out;
  LanguageSample sample = enumerate_language(e, depth, max_trees);
  if (sample.truncated) {
    out.truncated = true;
    return out;
  }
  out.trees = sample.trees.size();
  Nfta a = build_position_automaton(e, alphabet);
  for (const auto& t : sample.trees) {
    if (!a.accepts(t)) {
      out.mismatch = "tree " + to_string(t) + " of the language is rejected";
      return out;
    }
  }
  unsigned __int128 accepted = a.count_accepted(depth);
  if (accepted != sample.trees.size()) {
    out.mismatch = "automaton accepts " + to_decimal(accepted) +
                   " trees of depth <= " + std::to_string(depth) +
                   ", the language has " + std::to_string(sample.trees.size());
  }
  return out;
}

TreeExpr shrink(const TreeExpr& e,
                const std::function<bool(const TreeExpr&)>& fails) {
  TreeExpr current = e;
  for (bool descended = true; descended;) {
    descended = false;
    for (const auto& child : current.children()) {
      if (fails(child)) {
        current = child;
        descended = true;
        break;
      }
    }
  }
  return current;
}

OracleReport run_oracle_check(const OracleOptions& options) {
  RandomExprOptions gen_options;
  gen_options.max_depth = options.max_depth;
  gen_options.max_width = options.max_width;
  RandomExprGenerator gen(options.seed, gen_options);
  const RankedAlphabet& alphabet = gen.alphabet();

  auto failure = [&](const TreeExpr& e) -> std::optional<std::string> {
    if (auto m = check_follow_agreement(e, alphabet,
                                        options.follow_fast_override)) {
      return m;
    }
    if (options.tree_depth > 0) {
      LanguageCheck lc =
          check_language(e, alphabet, options.tree_depth, options.max_trees);
      if (lc.mismatch) return lc.mismatch;
    }
    return std::nullopt;
  };

  OracleReport report;
  while (report.checked < options.count) {
    TreeExpr e = gen.next();
    LanguageCheck lc;
    if (options.tree_depth > 0) {
      lc = check_language(e, alphabet, options.tree_depth, options.max_trees);
      if (lc.truncated) {
        ++report.redrawn;
        continue;
      }
      report.trees += lc.trees;
    }
    ++report.checked;
    auto problem =
        check_follow_agreement(e, alphabet, options.follow_fast_override);
    if (!problem) problem = lc.mismatch;
    if (problem) {
      TreeExpr small =
          shrink(e, [&](const TreeExpr& s) { return failure(s).has_value(); });
      report.counterexample = small;
      report.detail = failure(small).value_or(*problem);
      return report;
    }
  }
  return report;
}

}  // namespace treepos
