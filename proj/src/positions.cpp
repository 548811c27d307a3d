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

#include "treepos/positions.hpp"

#include <algorithm>

namespace treepos {

namespace {

template <typename T>
std::set<T> united(std::set<T> a, const std::set<T>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

// Index of the child of an Apply node that contains f, or -1.
int child_containing(const TreeExpr& e, const Position& f) {
  for (std::size_t i = 0; i < e.children().size(); ++i) {
    if (occurs_in(e.child(i), f)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

bool occurs_in(const TreeExpr& e, const Position& f) {
  if (e.is(ExprKind::kApply) && e.mark() == f.mark && e.symbol() == f.symbol) {
    return true;
  }
  return std::any_of(e.children().begin(), e.children().end(),
                     [&](const TreeExpr& c) { return occurs_in(c, f); });
}

void require_star_normalized(const LinearizedExpr& e) {
  if (!is_star_normalized(e.expr())) {
    throw Error("expression is not star-normalized: " + to_string(e.expr()));
  }
}

void require_position(const LinearizedExpr& e, const Position& f, int k) {
  auto info = e.find(f.mark);
  if (!info || info->position.symbol != f.symbol) {
    throw Error("position " + f.name() + " does not occur in the expression");
  }
  if (k < 1 || k > info->rank) {
    throw Error("child index " + std::to_string(k) + " out of range for " +
                f.name() + " of rank " + std::to_string(info->rank));
  }
}

// ---------------------------------------------------------------------------
// First / Last / Follow

PositionSet first_naive(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
      return {};
    case ExprKind::kConstant:
      return {{e.symbol()}, {}};
    case ExprKind::kApply:
      return {{}, {e.position()}};
    case ExprKind::kSum: {
      PositionSet out = first_naive(e.left());
      out |= first_naive(e.right());
      return out;
    }
    case ExprKind::kProduct: {
      PositionSet out = first_naive(e.left());
      if (contains_constant(e.left(), e.symbol())) {
        out.constants.erase(e.symbol());
        out |= first_naive(e.right());
      }
      return out;
    }
    case ExprKind::kStar:
      return first_naive(e.body());
  }
  return {};
}

PositionSet first_naive(const LinearizedExpr& e) {
  require_star_normalized(e);
  return first_naive(e.expr());
}

std::set<std::string> last_naive(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
      return {};
    case ExprKind::kConstant:
      return {e.symbol()};
    case ExprKind::kApply: {
      std::set<std::string> out;
      for (const auto& child : e.children()) out.merge(last_naive(child));
      return out;
    }
    case ExprKind::kSum:
      return united(last_naive(e.left()), last_naive(e.right()));
    case ExprKind::kProduct: {
      auto out = last_naive(e.left());
      if (out.erase(e.symbol()) > 0) out.merge(last_naive(e.right()));
      return out;
    }
    case ExprKind::kStar: {
      auto out = last_naive(e.body());
      out.insert(e.symbol());
      return out;
    }
  }
  return {};
}

std::set<std::string> last_naive(const LinearizedExpr& e) {
  require_star_normalized(e);
  return last_naive(e.expr());
}

PositionSet follow_naive(const TreeExpr& e, const Position& f, int k) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return {};
    case ExprKind::kApply: {
      if (e.mark() == f.mark && e.symbol() == f.symbol) {
        return first_naive(e.child(static_cast<std::size_t>(k - 1)));
      }
      int l = child_containing(e, f);
      if (l < 0) return {};
      return follow_naive(e.child(static_cast<std::size_t>(l)), f, k);
    }
    case ExprKind::kSum:
      if (occurs_in(e.left(), f)) return follow_naive(e.left(), f, k);
      if (occurs_in(e.right(), f)) return follow_naive(e.right(), f, k);
      return {};
    case ExprKind::kProduct: {
      const std::string& c = e.symbol();
      if (occurs_in(e.left(), f)) {
        PositionSet inner = follow_naive(e.left(), f, k);
        return inner.c_product(c, first_naive(e.right()));
      }
      if (occurs_in(e.right(), f) && last_naive(e.left()).count(c) > 0) {
        return follow_naive(e.right(), f, k);
      }
      return {};
    }
    case ExprKind::kStar: {
      PositionSet out = follow_naive(e.body(), f, k);
      if (out.contains(e.symbol())) out |= first_naive(e.body());
      return out;
    }
  }
  return {};
}

PositionSet follow_naive(const LinearizedExpr& e, const Position& f, int k) {
  require_star_normalized(e);
  require_position(e, f, k);
  return follow_naive(e.expr(), f, k);
}

// ---------------------------------------------------------------------------
// Decomposed recurrences

std::set<std::string> first0(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kApply:
      return {};
    case ExprKind::kConstant:
      return {e.symbol()};
    case ExprKind::kSum:
      return united(first0(e.left()), first0(e.right()));
    case ExprKind::kProduct: {
      auto out = first0(e.left());
      if (contains_constant(e.left(), e.symbol())) {
        out.erase(e.symbol());
        out.merge(first0(e.right()));
      }
      return out;
    }
    case ExprKind::kStar:
      return first0(e.body());
  }
  return {};
}

std::set<std::string> first0(const LinearizedExpr& e) {
  require_star_normalized(e);
  return first0(e.expr());
}

std::set<Position> first_sup(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return {};
    case ExprKind::kApply:
      return {e.position()};
    case ExprKind::kSum:
      return united(first_sup(e.left()), first_sup(e.right()));
    case ExprKind::kProduct:
      if (contains_constant(e.left(), e.symbol())) {
        return united(first_sup(e.left()), first_sup(e.right()));
      }
      return first_sup(e.left());
    case ExprKind::kStar:
      return first_sup(e.body());
  }
  return {};
}

std::set<Position> first_sup(const LinearizedExpr& e) {
  require_star_normalized(e);
  return first_sup(e.expr());
}

std::set<std::string> last_follow(const TreeExpr& e, const Position& f,
                                  int k) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return {};
    case ExprKind::kApply: {
      if (e.mark() == f.mark && e.symbol() == f.symbol) {
        return first0(e.child(static_cast<std::size_t>(k - 1)));
      }
      int l = child_containing(e, f);
      if (l < 0) return {};
      return last_follow(e.child(static_cast<std::size_t>(l)), f, k);
    }
    case ExprKind::kSum:
      if (occurs_in(e.left(), f)) return last_follow(e.left(), f, k);
      if (occurs_in(e.right(), f)) return last_follow(e.right(), f, k);
      return {};
    case ExprKind::kProduct: {
      const std::string& c = e.symbol();
      if (occurs_in(e.left(), f)) {
        auto out = last_follow(e.left(), f, k);
        if (out.erase(c) > 0) out.merge(first0(e.right()));
        return out;
      }
      if (occurs_in(e.right(), f) && last_naive(e.left()).count(c) > 0) {
        return last_follow(e.right(), f, k);
      }
      return {};
    }
    case ExprKind::kStar: {
      auto out = last_follow(e.body(), f, k);
      if (out.erase(e.symbol()) > 0) out.merge(first0(e.body()));
      return out;
    }
  }
  return {};
}

std::set<std::string> last_follow(const LinearizedExpr& e, const Position& f,
                                  int k) {
  require_star_normalized(e);
  require_position(e, f, k);
  return last_follow(e.expr(), f, k);
}

std::set<Position> follow_sup(const TreeExpr& e, const Position& f, int k) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return {};
    case ExprKind::kApply: {
      if (e.mark() == f.mark && e.symbol() == f.symbol) {
        return first_sup(e.child(static_cast<std::size_t>(k - 1)));
      }
      int l = child_containing(e, f);
      if (l < 0) return {};
      return follow_sup(e.child(static_cast<std::size_t>(l)), f, k);
    }
    case ExprKind::kSum:
      if (occurs_in(e.left(), f)) return follow_sup(e.left(), f, k);
      if (occurs_in(e.right(), f)) return follow_sup(e.right(), f, k);
      return {};
    case ExprKind::kProduct: {
      const std::string& c = e.symbol();
      if (last_follow(e.left(), f, k).count(c) > 0) {
        return united(follow_sup(e.left(), f, k), first_sup(e.right()));
      }
      if (occurs_in(e.left(), f)) return follow_sup(e.left(), f, k);
      if (occurs_in(e.right(), f) && last_naive(e.left()).count(c) > 0) {
        return follow_sup(e.right(), f, k);
      }
      return {};
    }
    case ExprKind::kStar: {
      auto out = follow_sup(e.body(), f, k);
      if (last_follow(e.body(), f, k).count(e.symbol()) > 0) {
        out.merge(first_sup(e.body()));
      }
      return out;
    }
  }
  return {};
}

std::set<Position> follow_sup(const LinearizedExpr& e, const Position& f,
                              int k) {
  require_star_normalized(e);
  require_position(e, f, k);
  return follow_sup(e.expr(), f, k);
}

PositionSet follow_decomposed(const LinearizedExpr& e, const Position& f,
                              int k) {
  return disjoint_union(last_follow(e, f, k), follow_sup(e, f, k));
}

}  // namespace treepos
