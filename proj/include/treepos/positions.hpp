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

#ifndef TREEPOS_POSITIONS_HPP_
#define TREEPOS_POSITIONS_HPP_

#include <set>
#include <string>

#include "treepos/expr.hpp"
#include "treepos/linearize.hpp"
#include "treepos/position_set.hpp"

namespace treepos {

// Reference computations of First, Last and Follow on linearized,
// star-normalized expressions, straight from the inductive definitions. No
// sharing or memoization: each call walks the expression again.
//
// The LinearizedExpr overloads check their preconditions and throw Error when
// the expression is not star-normalized, the position is absent, or k is out
// of range. The TreeExpr overloads work on any (sub)expression and skip the
// checks.

// First: roots of the trees of the language.
PositionSet first_naive(const LinearizedExpr& e);
PositionSet first_naive(const TreeExpr& e);

// Last: constants occurring as leaves of the trees of the language.
std::set<std::string> last_naive(const LinearizedExpr& e);
std::set<std::string> last_naive(const TreeExpr& e);

// Follow(e, f_j, k): symbols that can be the k-th child of f_j.
PositionSet follow_naive(const LinearizedExpr& e, const Position& f, int k);
PositionSet follow_naive(const TreeExpr& e, const Position& f, int k);

// Decomposed recurrences: First = First0 (constants) u First+ (positions),
// Follow = LastFollow (constants) u Follow+ (positions).
std::set<std::string> first0(const LinearizedExpr& e);
std::set<std::string> first0(const TreeExpr& e);

std::set<Position> first_sup(const LinearizedExpr& e);
std::set<Position> first_sup(const TreeExpr& e);

std::set<std::string> last_follow(const LinearizedExpr& e, const Position& f,
                                  int k);
std::set<std::string> last_follow(const TreeExpr& e, const Position& f, int k);

std::set<Position> follow_sup(const LinearizedExpr& e, const Position& f,
                              int k);
std::set<Position> follow_sup(const TreeExpr& e, const Position& f, int k);

// last_follow(e, f, k) u follow_sup(e, f, k).
PositionSet follow_decomposed(const LinearizedExpr& e, const Position& f,
                              int k);

// True if the position f_j occurs in e.
bool occurs_in(const TreeExpr& e, const Position& f);

// Throws Error unless `e` is star-normalized.
void require_star_normalized(const LinearizedExpr& e);
// Throws Error unless `f` occurs in `e` and 1 <= k <= rank(f).
void require_position(const LinearizedExpr& e, const Position& f, int k);

}  // namespace treepos

#endif  // TREEPOS_POSITIONS_HPP_
