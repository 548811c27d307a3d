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

#ifndef TREEPOS_GROUND_TREE_HPP_
#define TREEPOS_GROUND_TREE_HPP_

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace treepos {

// A finite ranked tree. `mark` is non-zero for trees over a linearized
// alphabet (f_j), zero for plain trees.
struct GroundTree {
  std::string symbol;
  int mark = 0;
  std::vector<GroundTree> children;

  GroundTree() = default;
  GroundTree(std::string symbol, std::vector<GroundTree> children = {},
             int mark = 0)
      : symbol(std::move(symbol)), mark(mark), children(std::move(children)) {}

  bool is_leaf() const { return children.empty(); }
  // A constant has depth 1.
  int depth() const;
  std::size_t node_count() const;
  // Symbol name including the mark (f1, g3, a).
  std::string label() const;
  // Constants occurring as leaves.
  std::set<std::string> leaves() const;
  // The same tree with every mark erased (the h image).
  GroundTree unmarked() const;

  friend std::strong_ordering operator<=>(const GroundTree& a,
                                          const GroundTree& b);
  friend bool operator==(const GroundTree& a, const GroundTree& b);
};

// s-expression form, e.g. g(b,a) or g3(f4(b),a).
std::string to_string(const GroundTree& t);
std::ostream& operator<<(std::ostream& out, const GroundTree& t);

// t{c <- L}: every c-leaf of t is replaced, independently, by a tree of L.
std::set<GroundTree> tree_substitute(const GroundTree& t, const std::string& c,
                                     const std::set<GroundTree>& language);

}  // namespace treepos

#endif  // TREEPOS_GROUND_TREE_HPP_
