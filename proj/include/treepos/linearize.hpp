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

#ifndef TREEPOS_LINEARIZE_HPP_
#define TREEPOS_LINEARIZE_HPP_

#include <optional>
#include <vector>

#include "treepos/alphabet.hpp"
#include "treepos/expr.hpp"

namespace treepos {

// A position together with its arity inside the linearized expression.
struct PositionInfo {
  Position position;
  int rank = 0;
};

// An expression whose function symbols carry distinct marks f_1, f_2, ...
// together with the un-marking map h (mark -> base symbol).
class LinearizedExpr {
 public:
  LinearizedExpr(TreeExpr expr, TreeExpr origin, RankedAlphabet alphabet);

  const TreeExpr& expr() const { return expr_; }
  const TreeExpr& origin() const { return origin_; }
  const RankedAlphabet& alphabet() const { return alphabet_; }

  // Ordered by mark.
  const std::vector<PositionInfo>& positions() const { return positions_; }
  std::optional<PositionInfo> find(int mark) const;
  bool contains(const Position& p) const;

  // h(f_j) = f.
  const std::string& unmark(int mark) const;

 private:
  TreeExpr expr_;
  TreeExpr origin_;
  RankedAlphabet alphabet_;
  std::vector<PositionInfo> positions_;
};

// Marks every function symbol occurrence, left to right in preorder starting
// at 1. Any existing marks are replaced.
LinearizedExpr linearize(const TreeExpr& e, const RankedAlphabet& alphabet);
LinearizedExpr linearize(const TreeExpr& e);

// The homomorphic image h(e): every mark erased.
TreeExpr unmark(const TreeExpr& e);

}  // namespace treepos

#endif  // TREEPOS_LINEARIZE_HPP_
