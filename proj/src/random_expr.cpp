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

#include "treepos/random_expr.hpp"

#include <iterator>
#include <set>

namespace treepos {

RandomExprGenerator::RandomExprGenerator(std::uint64_t seed,
                                         RandomExprOptions options)
    : options_(std::move(options)), rng_(seed) {
  if (options_.constants.empty()) throw Error("no constants to draw from");
  if (options_.max_depth < 1) throw Error("max_depth must be positive");
  for (const auto& c : options_.constants) alphabet_.add(c, 0);
  for (const auto& [f, rank] : options_.functions) {
    if (rank < 1) throw Error("function symbol '" + f + "' needs rank >= 1");
    alphabet_.add(f, rank);
  }
}

std::size_t RandomExprGenerator::pick(std::size_t n) {
  // Modulo keeps the sequence identical across standard libraries, unlike
  // std::uniform_int_distribution.
  return static_cast<std::size_t>(rng_() % n);
}

TreeExpr RandomExprGenerator::next() {
  int width = options_.max_width;
  return generate(options_.max_depth, width);
}

TreeExpr RandomExprGenerator::leaf() {
  if (options_.allow_empty && pick(8) == 0) return TreeExpr::empty();
  return TreeExpr::constant(options_.constants[pick(options_.constants.size())]);
}

namespace {

void collect_leaves(const TreeExpr& e, std::set<std::string>& out) {
  if (e.is(ExprKind::kConstant)) out.insert(e.symbol());
  for (const auto& child : e.children()) collect_leaves(child, out);
}

}  // namespace

std::string RandomExprGenerator::annotation(const TreeExpr& operand) {
  // Mostly a constant that occurs in the operand, so that the operation is
  // not the identity.
  std::set<std::string> leaves;
  collect_leaves(operand, leaves);
  if (!leaves.empty() && pick(4) != 0) {
    auto it = leaves.begin();
    std::advance(it, static_cast<long>(pick(leaves.size())));
    return *it;
  }
  return options_.constants[pick(options_.constants.size())];
}

TreeExpr RandomExprGenerator::generate(int depth, int& width) {
  if (depth <= 1) return leaf();
  // Weights out of 20: leaf 3, apply 6, sum 4, product 4, star 3.
  std::size_t roll = pick(20);
  if (roll < 3) return leaf();
  if (roll < 9) {
    if (width <= 0 || options_.functions.empty()) return leaf();
    --width;
    const auto& [f, rank] = options_.functions[pick(options_.functions.size())];
    std::vector<TreeExpr> children;
    for (int i = 0; i < rank; ++i) children.push_back(generate(depth - 1, width));
    return TreeExpr::apply(f, std::move(children));
  }
  if (roll < 13) {
    TreeExpr left = generate(depth - 1, width);
    return TreeExpr::sum(left, generate(depth - 1, width));
  }
  TreeExpr first = generate(depth - 1, width);
  const std::string c = annotation(first);
  if (roll < 17) return TreeExpr::product(first, c, generate(depth - 1, width));
  return TreeExpr::star(first, c);
}

}  // namespace treepos
