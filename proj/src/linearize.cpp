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

#include "treepos/linearize.hpp"

#include <algorithm>

namespace treepos {

namespace {

void collect_positions(const TreeExpr& e, std::vector<PositionInfo>& out) {
  if (e.is(ExprKind::kApply)) {
    out.push_back({e.position(), static_cast<int>(e.children().size())});
  }
  for (const auto& child : e.children()) collect_positions(child, out);
}

TreeExpr mark_preorder(const TreeExpr& e, int& next) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return e;
    case ExprKind::kApply: {
      int mark = next++;
      std::vector<TreeExpr> children;
      children.reserve(e.children().size());
      for (const auto& child : e.children()) {
        children.push_back(mark_preorder(child, next));
      }
      return TreeExpr::apply(e.symbol(), std::move(children), mark);
    }
    case ExprKind::kSum: {
      TreeExpr left = mark_preorder(e.left(), next);
      return TreeExpr::sum(std::move(left), mark_preorder(e.right(), next));
    }
    case ExprKind::kProduct: {
      TreeExpr left = mark_preorder(e.left(), next);
      return TreeExpr::product(std::move(left), e.symbol(),
                               mark_preorder(e.right(), next));
    }
    case ExprKind::kStar:
      return TreeExpr::star(mark_preorder(e.body(), next), e.symbol());
  }
  return e;
}

}  // namespace

LinearizedExpr::LinearizedExpr(TreeExpr expr, TreeExpr origin,
                               RankedAlphabet alphabet)
    : expr_(std::move(expr)),
      origin_(std::move(origin)),
      alphabet_(std::move(alphabet)) {
  if (!is_linear(expr_)) {
    throw Error("expression is not linear: " + to_string(expr_));
  }
  collect_positions(expr_, positions_);
  std::sort(positions_.begin(), positions_.end(),
            [](const PositionInfo& a, const PositionInfo& b) {
              return a.position < b.position;
            });
}

std::optional<PositionInfo> LinearizedExpr::find(int mark) const {
  auto it = std::lower_bound(
      positions_.begin(), positions_.end(), mark,
      [](const PositionInfo& p, int m) { return p.position.mark < m; });
  if (it == positions_.end() || it->position.mark != mark) return std::nullopt;
  return *it;
}

bool LinearizedExpr::contains(const Position& p) const {
  auto info = find(p.mark);
  return info && info->position.symbol == p.symbol;
}

const std::string& LinearizedExpr::unmark(int mark) const {
  auto it = std::lower_bound(
      positions_.begin(), positions_.end(), mark,
      [](const PositionInfo& p, int m) { return p.position.mark < m; });
  if (it == positions_.end() || it->position.mark != mark) {
    throw Error("no position with mark " + std::to_string(mark));
  }
  return it->position.symbol;
}

LinearizedExpr linearize(const TreeExpr& e, const RankedAlphabet& alphabet) {
  int next = 1;
  TreeExpr marked = mark_preorder(e, next);
  return LinearizedExpr(std::move(marked), e, alphabet);
}

LinearizedExpr linearize(const TreeExpr& e) {
  return linearize(e, infer_alphabet(e));
}

TreeExpr unmark(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return e;
    case ExprKind::kApply: {
      std::vector<TreeExpr> children;
      children.reserve(e.children().size());
      for (const auto& child : e.children()) children.push_back(unmark(child));
      return TreeExpr::apply(e.symbol(), std::move(children));
    }
    case ExprKind::kSum:
      return TreeExpr::sum(unmark(e.left()), unmark(e.right()));
    case ExprKind::kProduct:
      return TreeExpr::product(unmark(e.left()), e.symbol(),
                               unmark(e.right()));
    case ExprKind::kStar:
      return TreeExpr::star(unmark(e.body()), e.symbol());
  }
  return e;
}

}  // namespace treepos
