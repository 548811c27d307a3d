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

#include "treepos/language.hpp"

#include <algorithm>
#include <iterator>

namespace treepos {

TreeId TreeTable::intern(const std::string& symbol, int mark,
                         const std::vector<TreeId>& children) {
  std::string key = symbol;
  key += '#';
  key += std::to_string(mark);
  for (TreeId child : children) {
    key += ',';
    key += std::to_string(child);
  }
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int depth = 0;
  for (TreeId child : children) depth = std::max(depth, entries_[child].depth);
  auto id = static_cast<TreeId>(entries_.size());
  entries_.push_back({symbol, mark, children, depth + 1});
  index_.emplace(std::move(key), id);
  return id;
}

TreeId TreeTable::intern(const GroundTree& t) {
  std::vector<TreeId> children;
  children.reserve(t.children.size());
  for (const auto& child : t.children) children.push_back(intern(child));
  return intern(t.symbol, t.mark, children);
}

GroundTree TreeTable::to_ground(TreeId id) const {
  const Entry& entry = entries_[id];
  GroundTree t(entry.symbol, {}, entry.mark);
  t.children.reserve(entry.children.size());
  for (TreeId child : entry.children) t.children.push_back(to_ground(child));
  return t;
}

LanguageEnumerator::LanguageEnumerator(TreeTable& table, int max_depth,
                                       std::size_t max_count)
    : table_(table), max_depth_(max_depth), max_count_(max_count) {}

TreeIdSet LanguageEnumerator::enumerate(const TreeExpr& e) {
  // Memo keys are node addresses, valid only while `e` is alive.
  memo_.clear();
  return at_bound(e, max_depth_);
}

void LanguageEnumerator::insert_capped(TreeIdSet& into, const TreeIdSet& from) {
  TreeIdSet merged;
  merged.reserve(into.size() + from.size());
  std::set_union(into.begin(), into.end(), from.begin(), from.end(),
                 std::back_inserter(merged));
  if (merged.size() > max_count_) {
    truncated_ = true;
    merged.resize(max_count_);
  }
  into = std::move(merged);
}

namespace {

// Visits every tuple of the cartesian product of `options`; stops early when
// `visit` returns false.
template <typename Visit>
void for_each_tuple(const std::vector<TreeIdSet>& options, Visit visit) {
  for (const auto& option : options) {
    if (option.empty()) return;
  }
  std::vector<std::size_t> index(options.size(), 0);
  std::vector<TreeId> tuple(options.size());
  while (true) {
    for (std::size_t i = 0; i < options.size(); ++i) {
      tuple[i] = options[i][index[i]];
    }
    if (!visit(tuple)) return;
    std::size_t i = 0;
    while (i < index.size() && ++index[i] == options[i].size()) index[i++] = 0;
    if (i == index.size()) return;
  }
}

void sort_unique(TreeIdSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace

TreeIdSet LanguageEnumerator::product(const TreeIdSet& left,
                                      const std::string& c,
                                      const TreeIdSet& right, int bound) {
  // right_by_depth[d] holds the trees of `right` with depth <= d.
  std::vector<TreeIdSet> right_by_depth(static_cast<std::size_t>(bound) + 1);
  for (TreeId t : right) {
    for (int d = table_.depth(t); d <= bound; ++d) {
      right_by_depth[static_cast<std::size_t>(d)].push_back(t);
    }
  }
  std::map<std::pair<TreeId, int>, TreeIdSet> memo;
  // t{c <- right}, keeping only results of depth <= budget.
  auto substitute = [&](auto& self, TreeId t, int budget) -> TreeIdSet {
    if (budget < 1) return {};
    auto key = std::make_pair(t, budget);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    TreeIdSet out;
    const auto& kids = table_.children(t);
    if (kids.empty()) {
      if (table_.symbol(t) == c && table_.mark(t) == 0) {
        out = right_by_depth[static_cast<std::size_t>(budget)];
      } else {
        out = {t};
      }
    } else {
      std::vector<TreeIdSet> options;
      options.reserve(kids.size());
      for (TreeId kid : kids) options.push_back(self(self, kid, budget - 1));
      for_each_tuple(options, [&](const std::vector<TreeId>& tuple) {
        out.push_back(table_.intern(table_.symbol(t), table_.mark(t), tuple));
        if (out.size() > max_count_) {
          truncated_ = true;
          return false;
        }
        return true;
      });
      sort_unique(out);
    }
    memo.emplace(key, out);
    return out;
  };

  TreeIdSet result;
  for (TreeId t : left) {
    insert_capped(result, substitute(substitute, t, bound));
    if (truncated_ && result.size() >= max_count_) break;
  }
  return result;
}

TreeIdSet LanguageEnumerator::at_bound(const TreeExpr& e, int bound) {
  if (bound < 1) return {};
  auto key = std::make_pair(e.id(), bound);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  TreeIdSet out;
  switch (e.kind()) {
    case ExprKind::kEmpty:
      break;
    case ExprKind::kConstant:
      out = {table_.intern(e.symbol(), 0, {})};
      break;
    case ExprKind::kApply: {
      std::vector<TreeIdSet> options;
      for (const auto& child : e.children()) {
        options.push_back(at_bound(child, bound - 1));
      }
      for_each_tuple(options, [&](const std::vector<TreeId>& tuple) {
        out.push_back(table_.intern(e.symbol(), e.mark(), tuple));
        if (out.size() > max_count_) {
          truncated_ = true;
          return false;
        }
        return true;
      });
      sort_unique(out);
      if (out.size() > max_count_) out.resize(max_count_);
      break;
    }
    case ExprKind::kSum:
      out = at_bound(e.left(), bound);
      insert_capped(out, at_bound(e.right(), bound));
      break;
    case ExprKind::kProduct:
      out = product(at_bound(e.left(), bound), e.symbol(),
                    at_bound(e.right(), bound), bound);
      break;
    case ExprKind::kStar: {
      const TreeIdSet body = at_bound(e.body(), bound);
      TreeIdSet closure = {table_.intern(e.symbol(), 0, {})};
      while (true) {
        TreeIdSet next = closure;
        insert_capped(next, product(body, e.symbol(), closure, bound));
        if (next == closure) break;
        closure = std::move(next);
        if (truncated_) break;
      }
      out = std::move(closure);
      break;
    }
  }
  memo_.emplace(key, out);
  return out;
}

LanguageSample enumerate_language(const TreeExpr& e, int max_depth,
                                  std::size_t max_count) {
  TreeTable table;
  LanguageEnumerator enumerator(table, max_depth, max_count);
  LanguageSample sample;
  for (TreeId id : enumerator.enumerate(e)) {
    sample.trees.insert(table.to_ground(id));
  }
  sample.truncated = enumerator.truncated();
  return sample;
}

}  // namespace treepos
