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

#ifndef TREEPOS_EXPR_HPP_
#define TREEPOS_EXPR_HPP_

#include <compare>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "treepos/alphabet.hpp"

namespace treepos {

// A marked occurrence f_j of a function symbol. Constants are never marked.
struct Position {
  std::string symbol;
  int mark = 0;

  std::string name() const { return symbol + std::to_string(mark); }

  // Marks are unique within one linearization, so they alone fix the order.
  friend std::strong_ordering operator<=>(const Position& a,
                                          const Position& b) {
    if (auto c = a.mark <=> b.mark; c != 0) return c;
    return a.symbol.compare(b.symbol) <=> 0;
  }
  friend bool operator==(const Position&, const Position&) = default;
};

enum class ExprKind { kEmpty, kConstant, kApply, kSum, kProduct, kStar };

// Immutable regular tree expression. Nodes are shared, so copies are cheap
// and values may be read from several threads.
//
//   Empty              0
//   Constant(c)        c
//   Apply(f, E1..En)   f(E1, ..., En), optionally marked f_j
//   Sum(E1, E2)        E1 + E2
//   Product(E1, c, E2) E1 .c E2   (c-product)
//   Star(E1, c)        E1 *c      (c-closure)
class TreeExpr {
 public:
  static TreeExpr empty();
  static TreeExpr constant(std::string name);
  static TreeExpr apply(std::string symbol, std::vector<TreeExpr> children,
                        int mark = 0);
  static TreeExpr sum(TreeExpr left, TreeExpr right);
  static TreeExpr product(TreeExpr left, std::string constant, TreeExpr right);
  static TreeExpr star(TreeExpr body, std::string constant);

  ExprKind kind() const { return node_->kind; }
  // Constant name, function symbol, or the c annotation of a product/star.
  const std::string& symbol() const { return node_->symbol; }
  // Apply nodes only; 0 when unmarked.
  int mark() const { return node_->mark; }
  const std::vector<TreeExpr>& children() const { return node_->children; }
  const TreeExpr& child(std::size_t i) const { return node_->children.at(i); }
  const TreeExpr& left() const { return child(0); }
  const TreeExpr& right() const { return child(1); }
  const TreeExpr& body() const { return child(0); }

  bool is(ExprKind k) const { return kind() == k; }
  Position position() const { return {symbol(), mark()}; }

  // Identity of the shared node; equal ids imply structural equality.
  const void* id() const { return node_.get(); }

  friend bool operator==(const TreeExpr& a, const TreeExpr& b);

 private:
  struct Node {
    ExprKind kind;
    std::string symbol;
    int mark = 0;
    std::vector<TreeExpr> children;
  };
  explicit TreeExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Minimal-parenthesis rendering: star binds tighter than product, product
// tighter than sum, binary operators associate to the left. Marked symbols
// print as f1, g2, ...
std::string to_string(const TreeExpr& e);
std::ostream& operator<<(std::ostream& out, const TreeExpr& e);

struct Measure {
  int size = 0;       // nodes of the syntax tree
  int width = 0;      // occurrences of rank >= 1 symbols
  int constants = 0;  // occurrences of constants (the alternative width count)
};
Measure measure(const TreeExpr& e);

// Height of the syntax tree; a leaf has depth 1.
int expr_depth(const TreeExpr& e);

// Throws Error unless every symbol is declared, Apply arity equals rank, and
// every product/star annotation is a constant. Marked applications are checked
// against the rank of their base symbol.
void validate(const TreeExpr& e, const RankedAlphabet& alphabet);

// Rewrites every F*c into (F + c)*c. Bodies already of the form (F + c) are
// kept, which makes the rewrite idempotent.
TreeExpr normalize_stars(const TreeExpr& e);
bool is_star_normalized(const TreeExpr& e);

// The constants c with c in [[e]] (trees consisting of the single leaf c).
std::set<std::string> constants_in_language(const TreeExpr& e);
bool contains_constant(const TreeExpr& e, const std::string& c);
// Variant that checks `c` against the alphabet and throws if it is not a
// constant.
bool contains_constant(const TreeExpr& e, const std::string& c,
                       const RankedAlphabet& alphabet);

// True when every tree of [[e]] has `c` as a leaf. Conservative: may answer
// false for some languages where it holds.
bool every_tree_has_leaf(const TreeExpr& e, const std::string& c);

// True when [[e]] is certainly empty; uncertain product cases are reported as
// non-empty.
bool is_empty_language(const TreeExpr& e);

// Every Apply node is marked and no mark repeats.
bool is_linear(const TreeExpr& e);

// Alphabet inferred from usage: constants are rank 0, applications take the
// number of arguments as rank. Throws Error on inconsistent usage.
RankedAlphabet infer_alphabet(const TreeExpr& e);

}  // namespace treepos

#endif  // TREEPOS_EXPR_HPP_
