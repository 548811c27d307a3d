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

#ifndef TREEPOS_LANGUAGE_HPP_
#define TREEPOS_LANGUAGE_HPP_

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "treepos/expr.hpp"
#include "treepos/ground_tree.hpp"

namespace treepos {

// Brute-force semantics of regular tree expressions, used as the reference
// oracle for everything else in the library.

using TreeId = int;

// Hash-consed tree store: structurally equal trees share one id, so language
// sets are plain vectors of ids.
class TreeTable {
 public:
  TreeId intern(const std::string& symbol, int mark,
                const std::vector<TreeId>& children);
  TreeId intern(const GroundTree& t);

  const std::string& symbol(TreeId id) const { return entries_[id].symbol; }
  int mark(TreeId id) const { return entries_[id].mark; }
  const std::vector<TreeId>& children(TreeId id) const {
    return entries_[id].children;
  }
  int depth(TreeId id) const { return entries_[id].depth; }
  std::size_t size() const { return entries_.size(); }

  GroundTree to_ground(TreeId id) const;

 private:
  struct Entry {
    std::string symbol;
    int mark;
    std::vector<TreeId> children;
    int depth;
  };
  struct KeyHash {
    std::size_t operator()(const std::string& key) const {
      return std::hash<std::string>()(key);
    }
  };
  std::vector<Entry> entries_;
  std::unordered_map<std::string, TreeId, KeyHash> index_;
};

// Sorted, duplicate-free.
using TreeIdSet = std::vector<TreeId>;

// Computes { t in [[e]] | depth(t) <= max_depth } bottom-up. Products use the
// bounded substitution t{c <- L}; closures iterate L^{n+1} = L^n u L .c L^n
// until nothing new fits under the bound. Any set that would exceed
// `max_count` is cut short and `truncated()` becomes true.
class LanguageEnumerator {
 public:
  LanguageEnumerator(TreeTable& table, int max_depth,
                     std::size_t max_count =
                         std::numeric_limits<std::size_t>::max());

  TreeIdSet enumerate(const TreeExpr& e);
  bool truncated() const { return truncated_; }

 private:
  TreeIdSet at_bound(const TreeExpr& e, int bound);
  TreeIdSet product(const TreeIdSet& left, const std::string& c,
                    const TreeIdSet& right, int bound);
  void insert_capped(TreeIdSet& into, const TreeIdSet& from);

  TreeTable& table_;
  int max_depth_;
  std::size_t max_count_;
  bool truncated_ = false;
  std::map<std::pair<const void*, int>, TreeIdSet> memo_;
};

struct LanguageSample {
  std::set<GroundTree> trees;
  bool truncated = false;
};

LanguageSample enumerate_language(
    const TreeExpr& e, int max_depth,
    std::size_t max_count = std::numeric_limits<std::size_t>::max());

}  // namespace treepos

#endif  // TREEPOS_LANGUAGE_HPP_
