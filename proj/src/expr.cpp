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

#include "treepos/expr.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace treepos {

TreeExpr TreeExpr::empty() {
  static const TreeExpr kEmpty(
      std::make_shared<const Node>(Node{ExprKind::kEmpty, "", 0, {}}));
  return kEmpty;
}

TreeExpr TreeExpr::constant(std::string name) {
  return TreeExpr(std::make_shared<const Node>(
      Node{ExprKind::kConstant, std::move(name), 0, {}}));
}

TreeExpr TreeExpr::apply(std::string symbol, std::vector<TreeExpr> children,
                         int mark) {
  return TreeExpr(std::make_shared<const Node>(
      Node{ExprKind::kApply, std::move(symbol), mark, std::move(children)}));
}

TreeExpr TreeExpr::sum(TreeExpr left, TreeExpr right) {
  return TreeExpr(std::make_shared<const Node>(
      Node{ExprKind::kSum, "", 0, {std::move(left), std::move(right)}}));
}

TreeExpr TreeExpr::product(TreeExpr left, std::string constant,
                           TreeExpr right) {
  return TreeExpr(std::make_shared<const Node>(
      Node{ExprKind::kProduct, std::move(constant), 0,
           {std::move(left), std::move(right)}}));
}

TreeExpr TreeExpr::star(TreeExpr body, std::string constant) {
  return TreeExpr(std::make_shared<const Node>(
      Node{ExprKind::kStar, std::move(constant), 0, {std::move(body)}}));
}

bool operator==(const TreeExpr& a, const TreeExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.symbol() == b.symbol() &&
         a.mark() == b.mark() && a.children() == b.children();
}

namespace {

// Binding strength, loosest first.
enum Level { kSumLevel = 0, kProductLevel = 1, kStarLevel = 2, kAtomLevel = 3 };

Level level_of(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kSum:
      return kSumLevel;
    case ExprKind::kProduct:
      return kProductLevel;
    case ExprKind::kStar:
      return kStarLevel;
    default:
      return kAtomLevel;
  }
}

void print(std::ostream& out, const TreeExpr& e, Level context) {
  const bool parens = level_of(e) < context;
  if (parens) out << '(';
  switch (e.kind()) {
    case ExprKind::kEmpty:
      out << '0';
      break;
    case ExprKind::kConstant:
      out << e.symbol();
      break;
    case ExprKind::kApply: {
      out << e.symbol();
      if (e.mark() != 0) out << e.mark();
      out << '(';
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out << ',';
        print(out, e.child(i), kSumLevel);
      }
      out << ')';
      break;
    }
    case ExprKind::kSum:
      print(out, e.left(), kSumLevel);
      out << " + ";
      print(out, e.right(), kProductLevel);
      break;
    case ExprKind::kProduct:
      print(out, e.left(), kProductLevel);
      out << " ." << e.symbol() << ' ';
      print(out, e.right(), kStarLevel);
      break;
    case ExprKind::kStar:
      print(out, e.body(), kStarLevel);
      out << '*' << e.symbol();
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string to_string(const TreeExpr& e) {
  std::ostringstream out;
  print(out, e, kSumLevel);
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const TreeExpr& e) {
  print(out, e, kSumLevel);
  return out;
}

namespace {

void measure_into(const TreeExpr& e, Measure& m) {
  ++m.size;
  if (e.is(ExprKind::kApply)) ++m.width;
  if (e.is(ExprKind::kConstant)) ++m.constants;
  for (const auto& child : e.children()) measure_into(child, m);
}

}  // namespace

Measure measure(const TreeExpr& e) {
  Measure m;
  measure_into(e, m);
  return m;
}

int expr_depth(const TreeExpr& e) {
  int deepest = 0;
  for (const auto& child : e.children()) {
    deepest = std::max(deepest, expr_depth(child));
  }
  return deepest + 1;
}

void validate(const TreeExpr& e, const RankedAlphabet& alphabet) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
      return;
    case ExprKind::kConstant:
      if (alphabet.rank_of(e.symbol()) != 0) {
        throw Error("symbol '" + e.symbol() + "' has rank " +
                    std::to_string(alphabet.rank_of(e.symbol())) +
                    " but is used as a constant");
      }
      return;
    case ExprKind::kApply: {
      int rank = alphabet.rank_of(e.symbol());
      if (rank != static_cast<int>(e.children().size())) {
        throw Error("arity mismatch: '" + e.symbol() + "' has rank " +
                    std::to_string(rank) + " but is applied to " +
                    std::to_string(e.children().size()) + " argument(s)");
      }
      break;
    }
    case ExprKind::kSum:
      break;
    case ExprKind::kProduct:
    case ExprKind::kStar:
      if (!alphabet.is_constant(e.symbol())) {
        throw Error("annotation '" + e.symbol() +
                    "' of a product or star is not a constant");
      }
      break;
  }
  for (const auto& child : e.children()) validate(child, alphabet);
}

namespace {

bool is_sum_with_constant(const TreeExpr& e, const std::string& c) {
  return e.is(ExprKind::kSum) && e.right().is(ExprKind::kConstant) &&
         e.right().symbol() == c;
}

}  // namespace

TreeExpr normalize_stars(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return e;
    case ExprKind::kApply: {
      std::vector<TreeExpr> children;
      children.reserve(e.children().size());
      for (const auto& child : e.children()) {
        children.push_back(normalize_stars(child));
      }
      return TreeExpr::apply(e.symbol(), std::move(children), e.mark());
    }
    case ExprKind::kSum:
      return TreeExpr::sum(normalize_stars(e.left()),
                           normalize_stars(e.right()));
    case ExprKind::kProduct:
      return TreeExpr::product(normalize_stars(e.left()), e.symbol(),
                               normalize_stars(e.right()));
    case ExprKind::kStar: {
      const std::string& c = e.symbol();
      const TreeExpr& inner =
          is_sum_with_constant(e.body(), c) ? e.body().left() : e.body();
      return TreeExpr::star(
          TreeExpr::sum(normalize_stars(inner), TreeExpr::constant(c)), c);
    }
  }
  return e;
}

bool is_star_normalized(const TreeExpr& e) {
  if (e.is(ExprKind::kStar) && !is_sum_with_constant(e.body(), e.symbol())) {
    return false;
  }
  return std::all_of(e.children().begin(), e.children().end(),
                     [](const TreeExpr& c) { return is_star_normalized(c); });
}

std::set<std::string> constants_in_language(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kApply:
      return {};
    case ExprKind::kConstant:
      return {e.symbol()};
    case ExprKind::kSum: {
      auto out = constants_in_language(e.left());
      out.merge(constants_in_language(e.right()));
      return out;
    }
    case ExprKind::kProduct: {
      // c in [[E1 .c' E2]] iff (c in [[E1]], c != c') or (c' in [[E1]], c in
      // [[E2]]).
      auto out = constants_in_language(e.left());
      bool substituted = out.erase(e.symbol()) > 0;
      if (substituted) out.merge(constants_in_language(e.right()));
      return out;
    }
    case ExprKind::kStar: {
      auto out = constants_in_language(e.body());
      out.insert(e.symbol());
      return out;
    }
  }
  return {};
}

bool contains_constant(const TreeExpr& e, const std::string& c) {
  return constants_in_language(e).count(c) > 0;
}

bool contains_constant(const TreeExpr& e, const std::string& c,
                       const RankedAlphabet& alphabet) {
  if (!alphabet.is_constant(c)) {
    throw Error("'" + c + "' is not a constant of the alphabet");
  }
  return contains_constant(e, c);
}

bool every_tree_has_leaf(const TreeExpr& e, const std::string& c) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
      return true;
    case ExprKind::kConstant:
      return e.symbol() == c;
    case ExprKind::kApply:
      return std::any_of(
          e.children().begin(), e.children().end(),
          [&](const TreeExpr& child) { return every_tree_has_leaf(child, c); });
    case ExprKind::kSum:
      return every_tree_has_leaf(e.left(), c) &&
             every_tree_has_leaf(e.right(), c);
    case ExprKind::kProduct: {
      const std::string& annotation = e.symbol();
      if (c != annotation && every_tree_has_leaf(e.left(), c)) return true;
      return every_tree_has_leaf(e.left(), annotation) &&
             every_tree_has_leaf(e.right(), c);
    }
    case ExprKind::kStar:
      // The closure contains the single-leaf tree `annotation`.
      return c == e.symbol() && every_tree_has_leaf(e.body(), c);
  }
  return false;
}

bool is_empty_language(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
      return true;
    case ExprKind::kConstant:
    case ExprKind::kStar:
      return false;
    case ExprKind::kApply:
      return std::any_of(e.children().begin(), e.children().end(),
                         [](const TreeExpr& c) { return is_empty_language(c); });
    case ExprKind::kSum:
      return is_empty_language(e.left()) && is_empty_language(e.right());
    case ExprKind::kProduct:
      return is_empty_language(e.left()) ||
             (is_empty_language(e.right()) &&
              every_tree_has_leaf(e.left(), e.symbol()));
  }
  return false;
}

namespace {

bool collect_marks(const TreeExpr& e, std::unordered_set<int>& seen) {
  if (e.is(ExprKind::kApply)) {
    if (e.mark() <= 0 || !seen.insert(e.mark()).second) return false;
  }
  for (const auto& child : e.children()) {
    if (!collect_marks(child, seen)) return false;
  }
  return true;
}

void infer_into(const TreeExpr& e, RankedAlphabet& alphabet) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kSum:
      break;
    case ExprKind::kConstant:
    case ExprKind::kProduct:
    case ExprKind::kStar:
      alphabet.add(e.symbol(), 0);
      break;
    case ExprKind::kApply:
      alphabet.add(e.symbol(), static_cast<int>(e.children().size()));
      break;
  }
  for (const auto& child : e.children()) infer_into(child, alphabet);
}

}  // namespace

bool is_linear(const TreeExpr& e) {
  std::unordered_set<int> seen;
  return collect_marks(e, seen);
}

RankedAlphabet infer_alphabet(const TreeExpr& e) {
  RankedAlphabet alphabet;
  infer_into(e, alphabet);
  return alphabet;
}

}  // namespace treepos
