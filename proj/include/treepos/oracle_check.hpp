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

#ifndef TREEPOS_ORACLE_CHECK_HPP_
#define TREEPOS_ORACLE_CHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "treepos/alphabet.hpp"
#include "treepos/expr.hpp"
#include "treepos/position_set.hpp"
#include "treepos/zpc.hpp"

namespace treepos {

using FollowFastFn =
    std::function<PositionSet(const ZpcStructure&, const Position&, int)>;

// Compares every Follow route on normalize_stars(e): naive, decomposed, gamma
// chain, fast, and the substitution-based follow_all, together with the
// constant/position splits of First and Follow. Returns a description of the
// first disagreement. `fast` replaces follow_fast when set.
std::optional<std::string> check_follow_agreement(
    const TreeExpr& e, const RankedAlphabet& alphabet,
    const FollowFastFn& fast = {});

struct LanguageCheck {
  // Set when the automaton and the enumerated language disagree.
  std::optional<std::string> mismatch;
  // The enumeration hit max_trees; nothing was compared.
  bool truncated = false;
  std::size_t trees = 0;
};

// Membership of every enumerated tree of depth <= depth plus equality of the
// number of accepted trees of depth <= depth, which together give set
// equality.
LanguageCheck check_language(const TreeExpr& e, const RankedAlphabet& alphabet,
                             int depth, std::size_t max_trees);

// Descends into subexpressions while `fails` still holds.
TreeExpr shrink(const TreeExpr& e,
                const std::function<bool(const TreeExpr&)>& fails);

struct OracleOptions {
  std::uint64_t seed = 42;
  int count = 100;
  int max_depth = 5;
  int max_width = 5;
  // Depth bound of the language comparison; 0 skips it.
  int tree_depth = 4;
  // Expressions whose language exceeds this are redrawn.
  std::size_t max_trees = 20000;
  FollowFastFn follow_fast_override;
};

struct OracleReport {
  int checked = 0;
  int redrawn = 0;
  std::size_t trees = 0;
  std::optional<TreeExpr> counterexample;
  std::string detail;

  bool passed() const { return !counterexample.has_value(); }
};

// Draws `count` random expressions and runs both checks on each, stopping at
// the first failure, which is shrunk before being reported.
OracleReport run_oracle_check(const OracleOptions& options);

}  // namespace treepos

#endif  // TREEPOS_ORACLE_CHECK_HPP_
