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

#include "treepos/ground_tree.hpp"

#include <algorithm>
#include <sstream>

namespace treepos {

int GroundTree::depth() const {
  int deepest = 0;
  for (const auto& child : children) deepest = std::max(deepest, child.depth());
  return deepest + 1;
}

std::size_t GroundTree::node_count() const {
  std::size_t n = 1;
  for (const auto& child : children) n += child.node_count();
  return n;
}

std::string GroundTree::label() const {
  return mark == 0 ? symbol : symbol + std::to_string(mark);
}

std::set<std::string> GroundTree::leaves() const {
  std::set<std::string> out;
  if (children.empty()) {
    out.insert(symbol);
    return out;
  }
  for (const auto& child : children) out.merge(child.leaves());
  return out;
}

GroundTree GroundTree::unmarked() const {
  GroundTree out(symbol);
  out.children.reserve(children.size());
  for (const auto& child : children) out.children.push_back(child.unmarked());
  return out;
}

std::strong_ordering operator<=>(const GroundTree& a, const GroundTree& b) {
  if (auto c = a.symbol.compare(b.symbol) <=> 0; c != 0) return c;
  if (auto c = a.mark <=> b.mark; c != 0) return c;
  if (auto c = a.children.size() <=> b.children.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (auto c = a.children[i] <=> b.children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroundTree& a, const GroundTree& b) {
  return (a <=> b) == 0;
}

namespace {

void print(std::ostream& out, const GroundTree& t) {
  out << t.label();
  if (t.children.empty()) return;
  out << '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out << ',';
    print(out, t.children[i]);
  }
  out << ')';
}

}  // namespace

std::string to_string(const GroundTree& t) {
  std::ostringstream out;
  print(out, t);
  return out.str();
}

std::ostream& operator<<(std::ostream& out, const GroundTree& t) {
  print(out, t);
  return out;
}

std::set<GroundTree> tree_substitute(const GroundTree& t, const std::string& c,
                                     const std::set<GroundTree>& language) {
  if (t.is_leaf()) {
    if (t.symbol == c && t.mark == 0) return language;
    return {t};
  }
  // f(t1{c<-L}, ..., tn{c<-L}) as a cartesian product.
  std::vector<std::vector<GroundTree>> options;
  for (const auto& child : t.children) {
    auto sub = tree_substitute(child, c, language);
    if (sub.empty()) return {};
    options.emplace_back(sub.begin(), sub.end());
  }
  std::set<GroundTree> out;
  std::vector<std::size_t> index(options.size(), 0);
  while (true) {
    GroundTree built(t.symbol, {}, t.mark);
    built.children.reserve(options.size());
    for (std::size_t i = 0; i < options.size(); ++i) {
      built.children.push_back(options[i][index[i]]);
    }
    out.insert(std::move(built));
    std::size_t i = 0;
    while (i < index.size() && ++index[i] == options[i].size()) index[i++] = 0;
    if (i == index.size()) break;
  }
  return out;
}

}  // namespace treepos
