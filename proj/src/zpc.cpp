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

#include "treepos/zpc.hpp"

#include <sstream>

#include "treepos/positions.hpp"

namespace treepos {

bool ConstantMask::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

ConstantMask& ConstantMask::operator|=(const ConstantMask& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

const ZpcNode& ZpcStructure::node(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
    throw Error("invalid node id " + std::to_string(id));
  }
  return nodes_[static_cast<std::size_t>(id)];
}

std::optional<int> ZpcStructure::node_of(const Position& p) const {
  auto it = node_of_mark_.find(p.mark);
  if (it == node_of_mark_.end()) return std::nullopt;
  if (nodes_[static_cast<std::size_t>(it->second)].symbol != p.symbol) {
    return std::nullopt;
  }
  return it->second;
}

int ZpcStructure::constant_index(const std::string& c) const {
  auto it = constant_index_.find(c);
  return it == constant_index_.end() ? -1 : it->second;
}

std::set<std::string> ZpcStructure::constants_of(
    const ConstantMask& mask) const {
  std::set<std::string> out;
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    if (mask.test(static_cast<int>(i))) out.insert(constants_[i]);
  }
  return out;
}

const TreeExpr& ZpcStructure::subexpr(int id) const {
  node(id);
  return subexprs_[static_cast<std::size_t>(id)];
}

const std::string& ZpcStructure::op(int id) const {
  const ZpcNode& n = node(id);
  if (n.parent < 0) throw Error("the root has no father");
  const ZpcNode& p = nodes_[static_cast<std::size_t>(n.parent)];
  if (!p.is_operator()) {
    throw Error("father of node " + std::to_string(id) +
                " is not a product or star");
  }
  return p.symbol;
}

namespace {

// Prefix traversal of the First forest below `start`. `visited` spans all
// nodes and is shared across calls so each node is collected at most once.
void collect_forest(const ZpcStructure& z, int start,
                    std::vector<char>& visited, std::vector<int>& out) {
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    auto& seen = visited[static_cast<std::size_t>(id)];
    if (seen) continue;
    seen = 1;
    const ZpcNode& n = z.nodes()[static_cast<std::size_t>(id)];
    if (!n.in_forest) continue;
    if (n.kind == ExprKind::kApply) out.push_back(id);
    for (std::size_t i = n.children.size(); i-- > 0;) {
      if (n.forest_link[i]) stack.push_back(n.children[i]);
    }
  }
}

std::set<Position> positions_of(const ZpcStructure& z,
                                const std::vector<int>& ids) {
  std::set<Position> out;
  for (int id : ids) {
    const ZpcNode& n = z.nodes()[static_cast<std::size_t>(id)];
    out.insert(Position{n.symbol, n.mark});
  }
  return out;
}

int checked_node(const ZpcStructure& z, const Position& f, int k) {
  auto id = z.node_of(f);
  if (!id) throw Error("position " + f.name() + " does not occur");
  const ZpcNode& n = z.nodes()[static_cast<std::size_t>(*id)];
  if (k < 1 || static_cast<std::size_t>(k) > n.children.size()) {
    throw Error("child index " + std::to_string(k) + " out of range for " +
                f.name());
  }
  return *id;
}

}  // namespace

bool ZpcNode::is_operator() const {
  return kind == ExprKind::kProduct || kind == ExprKind::kStar;
}

PositionSet ZpcStructure::first(int id) const {
  node(id);
  std::vector<char> visited(nodes_.size(), 0);
  std::vector<int> found;
  collect_forest(*this, id, visited, found);
  return disjoint_union(constants_of(nodes_[static_cast<std::size_t>(id)].first0),
                        positions_of(*this, found));
}

std::vector<ForestCut> ZpcStructure::removed_links() const {
  std::vector<ForestCut> out;
  for (const auto& n : nodes_) {
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (n.forest_link[i]) continue;
      out.push_back({n.id, n.children[i],
                     n.kind == ExprKind::kApply ? CutReason::kApplyChild
                                                : CutReason::kProductRight});
    }
  }
  return out;
}

std::vector<std::pair<int, int>> ZpcStructure::gamma_links() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& n : nodes_) {
    if (n.gamma >= 0) out.emplace_back(n.id, n.gamma);
  }
  return out;
}

namespace {

std::string node_label(const ZpcNode& n) {
  switch (n.kind) {
    case ExprKind::kEmpty:
      return "0";
    case ExprKind::kConstant:
      return n.symbol;
    case ExprKind::kApply:
      return n.symbol + std::to_string(n.mark);
    case ExprKind::kSum:
      return "+";
    case ExprKind::kProduct:
      return "." + n.symbol;
    case ExprKind::kStar:
      return "*" + n.symbol;
  }
  return "?";
}

}  // namespace

std::string ZpcStructure::to_dot() const {
  std::ostringstream out;
  out << "digraph zpc {\n  node [shape=plaintext];\n";
  for (const auto& n : nodes_) {
    out << "  n" << n.id << " [label=";
    if (n.in_forest) {
      out << '"' << node_label(n) << '"';
    } else {
      out << "<<S>" << node_label(n) << "</S>>, fontcolor=gray";
    }
    out << "];\n";
  }
  for (const auto& n : nodes_) {
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      out << "  n" << n.id << " -> n" << n.children[i];
      if (!n.forest_link[i]) out << " [style=dashed]";
      out << ";\n";
    }
  }
  for (const auto& [from, to] : gamma_links()) {
    out << "  n" << from << " -> n" << to
        << " [color=red, constraint=false];\n";
  }
  out << "}\n";
  return out.str();
}

ZpcStructure build_zpc(const LinearizedExpr& e) {
  require_star_normalized(e);
  ZpcStructure z(e);

  std::set<std::string> names;
  for (const auto& c : e.alphabet().constants()) names.insert(c);
  // Preorder arena.
  std::vector<std::pair<TreeExpr, int>> stack{{e.expr(), -1}};
  while (!stack.empty()) {
    auto [expr, parent] = stack.back();
    stack.pop_back();
    ZpcNode n;
    n.id = static_cast<int>(z.nodes_.size());
    n.kind = expr.kind();
    n.symbol = expr.symbol();
    n.mark = expr.mark();
    n.parent = parent;
    n.in_forest = !expr.is(ExprKind::kConstant);
    if (expr.is(ExprKind::kConstant) || expr.is(ExprKind::kProduct) ||
        expr.is(ExprKind::kStar)) {
      names.insert(expr.symbol());
    }
    if (expr.is(ExprKind::kApply)) {
      if (!z.node_of_mark_.emplace(n.mark, n.id).second || n.mark <= 0) {
        throw Error("expression is not linear");
      }
    }
    if (parent >= 0) {
      z.nodes_[static_cast<std::size_t>(parent)].children.push_back(n.id);
    }
    z.nodes_.push_back(std::move(n));
    z.subexprs_.push_back(expr);
    const auto& kids = expr.children();
    for (std::size_t i = kids.size(); i-- > 0;) {
      stack.emplace_back(kids[i], z.nodes_.back().id);
    }
  }

  z.constants_.assign(names.begin(), names.end());
  for (std::size_t i = 0; i < z.constants_.size(); ++i) {
    z.constant_index_.emplace(z.constants_[i], static_cast<int>(i));
  }
  const std::size_t universe = z.constants_.size();

  // Children carry larger ids, so a reverse sweep is bottom-up.
  for (std::size_t i = z.nodes_.size(); i-- > 0;) {
    ZpcNode& n = z.nodes_[i];
    n.first0 = ConstantMask(universe);
    n.last = ConstantMask(universe);
    n.forest_link.assign(n.children.size(), true);
    auto kid = [&](std::size_t j) -> const ZpcNode& {
      return z.nodes_[static_cast<std::size_t>(n.children[j])];
    };
    switch (n.kind) {
      case ExprKind::kEmpty:
        break;
      case ExprKind::kConstant: {
        int c = z.constant_index_.at(n.symbol);
        n.first0.set(c);
        n.last.set(c);
        break;
      }
      case ExprKind::kApply:
        for (std::size_t j = 0; j < n.children.size(); ++j) {
          n.last |= kid(j).last;
          n.forest_link[j] = false;
        }
        break;
      case ExprKind::kSum:
        n.first0 = kid(0).first0;
        n.first0 |= kid(1).first0;
        n.last = kid(0).last;
        n.last |= kid(1).last;
        break;
      case ExprKind::kProduct: {
        int c = z.constant_index_.at(n.symbol);
        n.first0 = kid(0).first0;
        if (n.first0.test(c)) {
          n.first0.reset(c);
          n.first0 |= kid(1).first0;
        } else {
          n.forest_link[1] = false;
        }
        n.last = kid(0).last;
        if (n.last.test(c)) {
          n.last.reset(c);
          n.last |= kid(1).last;
        }
        break;
      }
      case ExprKind::kStar:
        n.first0 = kid(0).first0;
        n.last = kid(0).last;
        n.last.set(z.constant_index_.at(n.symbol));
        break;
    }
  }

  // Follow links and liveness, top-down.
  for (auto& n : z.nodes_) {
    if (n.parent < 0) continue;
    const ZpcNode& p = z.nodes_[static_cast<std::size_t>(n.parent)];
    bool is_left = !p.children.empty() && p.children[0] == n.id;
    n.live = p.live;
    if (p.kind == ExprKind::kStar) {
      n.gamma = p.id;
    } else if (p.kind == ExprKind::kProduct) {
      if (is_left) {
        n.gamma = p.children[1];
      } else if (!z.nodes_[static_cast<std::size_t>(p.children[0])].last.test(
                     z.constant_index_.at(p.symbol))) {
        n.live = false;
      }
    }
  }
  return z;
}

std::set<Position> first_sup_from_forest(const ZpcStructure& z, int node) {
  z.node(node);
  std::vector<char> visited(z.size(), 0);
  std::vector<int> found;
  collect_forest(z, node, visited, found);
  return positions_of(z, found);
}

std::vector<int> gamma_chain(const ZpcStructure& z, int node) {
  z.node(node);
  std::vector<int> out;
  for (int x = node; x >= 0; x = z.nodes()[static_cast<std::size_t>(x)].parent) {
    if (z.nodes()[static_cast<std::size_t>(x)].gamma >= 0) out.push_back(x);
  }
  return out;
}

PositionSet follow_via_gamma(const ZpcStructure& z, const Position& f, int k) {
  int id = checked_node(z, f, k);
  const ZpcNode& n = z.nodes()[static_cast<std::size_t>(id)];
  if (!n.live) return {};
  PositionSet out = z.first(n.children[static_cast<std::size_t>(k - 1)]);
  for (int mu : gamma_chain(z, id)) {
    out = out.c_product(z.op(mu),
                        z.first(z.nodes()[static_cast<std::size_t>(mu)].gamma));
  }
  return out;
}

namespace {

// Follow(E, f, k) where LastFollow starts from `seed` and Follow+ from the
// forest below `start` (-1 for none). With seed = First0(E_k) and start = the
// k-th child this is follow_fast; with seed = {a} and no start it is
// Follow(E^a_f, f, 1), because replacing the subexpression rooted at f by
// f(a) changes neither a First0 array outside it nor a reachable forest link.
PositionSet follow_seeded(const ZpcStructure& z, int id, ConstantMask seed,
                          int start) {
  const auto& nodes = z.nodes();
  auto at = [&](int i) -> const ZpcNode& {
    return nodes[static_cast<std::size_t>(i)];
  };
  if (!at(id).live) return {};

  // Phase 1: LastFollow(E_x) for every x on the path from f up to the root.
  // las_path[i] belongs to path[i].
  std::vector<int> path;
  std::vector<ConstantMask> las_path;
  ConstantMask las = std::move(seed);
  path.push_back(id);
  las_path.push_back(las);
  for (int x = id; at(x).parent >= 0; x = at(x).parent) {
    const ZpcNode& p = at(at(x).parent);
    if (p.kind == ExprKind::kProduct && p.children[0] == x) {
      int c = z.constant_index(p.symbol);
      if (las.test(c)) {
        las.reset(c);
        las |= at(p.children[1]).first0;
      }
    } else if (p.kind == ExprKind::kStar) {
      int c = z.constant_index(p.symbol);
      if (las.test(c)) {
        las.reset(c);
        las |= at(x).first0;
      }
    }
    path.push_back(p.id);
    las_path.push_back(las);
  }

  // Phase 2: Follow+ from the forest below `start` and below every gamma(mu)
  // whose op(mu) survives in LastFollow(E_mu).
  std::vector<char> visited(z.size(), 0);
  std::vector<int> found;
  if (start >= 0) collect_forest(z, start, visited, found);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const ZpcNode& mu = at(path[i]);
    if (mu.gamma < 0) continue;
    if (las_path[i].test(z.constant_index(z.op(mu.id)))) {
      collect_forest(z, mu.gamma, visited, found);
    }
  }
  return disjoint_union(z.constants_of(las), positions_of(z, found));
}

}  // namespace

PositionSet follow_fast(const ZpcStructure& z, const Position& f, int k) {
  int id = checked_node(z, f, k);
  int start = z.node(id).children[static_cast<std::size_t>(k - 1)];
  return follow_seeded(z, id, z.node(start).first0, start);
}

namespace {

TreeExpr replace_position(const TreeExpr& e, const Position& f,
                          const TreeExpr& replacement, bool& done) {
  if (done) return e;
  if (e.is(ExprKind::kApply) && e.mark() == f.mark && e.symbol() == f.symbol) {
    done = true;
    return replacement;
  }
  if (e.children().empty()) return e;
  std::vector<TreeExpr> kids;
  kids.reserve(e.children().size());
  bool changed = false;
  for (const auto& child : e.children()) {
    kids.push_back(replace_position(child, f, replacement, done));
    changed = changed || kids.back().id() != child.id();
  }
  if (!changed) return e;
  switch (e.kind()) {
    case ExprKind::kApply:
      return TreeExpr::apply(e.symbol(), std::move(kids), e.mark());
    case ExprKind::kSum:
      return TreeExpr::sum(kids[0], kids[1]);
    case ExprKind::kProduct:
      return TreeExpr::product(kids[0], e.symbol(), kids[1]);
    case ExprKind::kStar:
      return TreeExpr::star(kids[0], e.symbol());
    default:
      return e;
  }
}

}  // namespace

LinearizedExpr substitute_subexpr(const LinearizedExpr& e, const Position& f,
                                  const std::string& a) {
  if (!e.contains(f)) throw Error("position " + f.name() + " does not occur");
  if (auto r = e.alphabet().rank(a); r && *r != 0) {
    throw Error("'" + a + "' is not a constant");
  }
  bool done = false;
  TreeExpr replaced = replace_position(
      e.expr(), f, TreeExpr::apply(f.symbol, {TreeExpr::constant(a)}, f.mark),
      done);
  return LinearizedExpr(replaced, e.origin(), e.alphabet());
}

FollowMap follow_all(const LinearizedExpr& e) {
  ZpcStructure z = build_zpc(e);
  FollowMap out;
  for (const auto& info : e.positions()) {
    const Position& f = info.position;
    int id = *z.node_of(f);
    const ZpcNode& n = z.node(id);
    if (!n.live) {
      for (int k = 1; k <= info.rank; ++k) out[{f, k}] = {};
      continue;
    }
    // Follow(E^a_f, f, 1) per constant a, shared by every k.
    std::vector<std::optional<PositionSet>> cache(z.constants().size());
    for (int k = 1; k <= info.rank; ++k) {
      int child = n.children[static_cast<std::size_t>(k - 1)];
      PositionSet s;
      s.marked = first_sup_from_forest(z, child);
      const ConstantMask& roots = z.node(child).first0;
      for (std::size_t a = 0; a < cache.size(); ++a) {
        if (!roots.test(static_cast<int>(a))) continue;
        if (!cache[a]) {
          ConstantMask seed(z.constants().size());
          seed.set(static_cast<int>(a));
          cache[a] = follow_seeded(z, id, std::move(seed), -1);
        }
        s |= *cache[a];
      }
      out[{f, k}] = std::move(s);
    }
  }
  return out;
}

}  // namespace treepos
