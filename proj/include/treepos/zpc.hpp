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

#ifndef TREEPOS_ZPC_HPP_
#define TREEPOS_ZPC_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "treepos/expr.hpp"
#include "treepos/linearize.hpp"
#include "treepos/position_set.hpp"

namespace treepos {

// Fixed-size membership array over an enumeration of the constants.
class ConstantMask {
 public:
  ConstantMask() = default;
  explicit ConstantMask(std::size_t universe)
      : words_((universe + 63) / 64, 0) {}

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U;
  }
  void set(int i) { words_[static_cast<std::size_t>(i) / 64] |= bit(i); }
  void reset(int i) { words_[static_cast<std::size_t>(i) / 64] &= ~bit(i); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  bool any() const;
  std::size_t cells() const { return words_.size(); }

  ConstantMask& operator|=(const ConstantMask& other);
  friend bool operator==(const ConstantMask&, const ConstantMask&) = default;

 private:
  static std::uint64_t bit(int i) { return std::uint64_t{1} << (i % 64); }
  std::vector<std::uint64_t> words_;
};

// Node of the decorated syntax tree.
struct ZpcNode {
  int id = 0;
  ExprKind kind = ExprKind::kEmpty;
  // Constant name, function symbol, or the c of a product/star.
  std::string symbol;
  int mark = 0;
  int parent = -1;
  std::vector<int> children;
  // forest_link[i]: the link to children[i] survives in the First forest.
  std::vector<bool> forest_link;
  // Constant leaves are deleted from the First forest but stay in the arena.
  bool in_forest = true;
  ConstantMask first0;
  // Last(E_node); guards the right operand of a product.
  ConstantMask last;
  // Follow link, -1 for none.
  int gamma = -1;
  // False when some enclosing product E1 .c E2 has this node inside E2 and
  // c is not a leaf of any tree of E1: no tree of the language uses it.
  bool live = true;

  bool is_operator() const;
};

enum class CutReason { kProductRight, kApplyChild };

struct ForestCut {
  int parent;
  int child;
  CutReason reason;
  friend bool operator==(const ForestCut&, const ForestCut&) = default;
};

// The syntax tree of a linearized, star-normalized expression equipped with
// per-node First0 arrays, a pruned First forest encoding First+, and gamma
// follow links. Immutable once built; node ids follow preorder.
class ZpcStructure {
 public:
  const std::vector<ZpcNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  int root() const { return 0; }
  // Throws Error on an invalid id.
  const ZpcNode& node(int id) const;

  // Node labelled by the position, or nullopt.
  std::optional<int> node_of(const Position& p) const;

  // The enumeration indexing every ConstantMask.
  const std::vector<std::string>& constants() const { return constants_; }
  int constant_index(const std::string& c) const;
  std::set<std::string> constants_of(const ConstantMask& mask) const;

  const LinearizedExpr& source() const { return source_; }
  // E_node.
  const TreeExpr& subexpr(int id) const;

  // op(node): the c of the product or star that node's father carries.
  const std::string& op(int id) const;

  // First(E_node) = first0 u First forest below node.
  PositionSet first(int id) const;

  // Links removed while pruning the syntax tree into the First forest.
  std::vector<ForestCut> removed_links() const;
  // (node, gamma(node)) for every node with a follow link.
  std::vector<std::pair<int, int>> gamma_links() const;

  // Graphviz rendering: solid tree edges, dashed removed links, struck-out
  // deleted leaves, red gamma links.
  std::string to_dot() const;

 private:
  explicit ZpcStructure(LinearizedExpr source) : source_(std::move(source)) {}
  friend ZpcStructure build_zpc(const LinearizedExpr& e);

  LinearizedExpr source_;
  std::vector<ZpcNode> nodes_;
  std::vector<TreeExpr> subexprs_;
  std::vector<std::string> constants_;
  std::map<std::string, int, std::less<>> constant_index_;
  std::map<int, int> node_of_mark_;
};

// Builds the structure in time and space linear in |e| (for a fixed set of
// constants). Throws Error when e is not linear or not star-normalized.
ZpcStructure build_zpc(const LinearizedExpr& e);

// First+(E_node) by prefix traversal of the First forest below `node`.
std::set<Position> first_sup_from_forest(const ZpcStructure& z, int node);

// The nodes mu on the path from `node` to the root (both included) with a
// follow link, innermost first.
std::vector<int> gamma_chain(const ZpcStructure& z, int node);

// Follow(E, f, k) as the left-folded chain
//   First(E_nu0) .op(nu1) First(E_gamma(nu1)) ... .op(nu_m) First(E_gamma(nu_m))
// with nu0 the k-th child of f and nu1..nu_m = gamma_chain(f).
PositionSet follow_via_gamma(const ZpcStructure& z, const Position& f, int k);

// Two-phase Follow: LastFollow bottom-up along the root path with constant
// arrays, then Follow+ by walking the gamma chain and unioning forest
// traversals wherever op(nu) is in LastFollow(E_nu).
PositionSet follow_fast(const ZpcStructure& z, const Position& f, int k);

// E^a_f: the subexpression rooted at f replaced by f(a).
LinearizedExpr substitute_subexpr(const LinearizedExpr& e, const Position& f,
                                  const std::string& a);

using FollowMap = std::map<std::pair<Position, int>, PositionSet>;

// Every Follow(E, f, k) through
//   Follow(E, f, k) = First+(E_k) u U_{a in First0(E_k)} Follow(E^a_f, f, 1),
// computing each Follow(E^a_f, f, 1) once per (f, a). E^a_f agrees with E on
// every First0 array and on every forest link reachable from outside f, so
// the two-phase walk of follow_fast runs on the structure of E seeded with
// {a} instead of rebuilding one for E^a_f. O(|E|) per (f, a).
FollowMap follow_all(const LinearizedExpr& e);

}  // namespace treepos

#endif  // TREEPOS_ZPC_HPP_
