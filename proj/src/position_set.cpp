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

#include "treepos/position_set.hpp"

#include <sstream>

namespace treepos {

PositionSet& PositionSet::operator|=(const PositionSet& other) {
  constants.insert(other.constants.begin(), other.constants.end());
  marked.insert(other.marked.begin(), other.marked.end());
  return *this;
}

PositionSet PositionSet::c_product(const std::string& c,
                                   const PositionSet& next) const {
  if (!contains(c)) return *this;
  PositionSet out = *this;
  out.constants.erase(c);
  out |= next;
  return out;
}

PositionSet disjoint_union(std::set<std::string> constants,
                           std::set<Position> marked) {
  return PositionSet{std::move(constants), std::move(marked)};
}

namespace {

template <typename Range, typename Name>
void write_items(std::ostream& out, const Range& items, bool& first,
                 Name name) {
  for (const auto& item : items) {
    if (!first) out << ", ";
    first = false;
    out << name(item);
  }
}

}  // namespace

std::string to_string(const PositionSet& s) {
  std::ostringstream out;
  out << s;
  return out.str();
}

std::string to_string(const std::set<std::string>& constants) {
  return to_string(PositionSet{constants, {}});
}

std::string to_string(const std::set<Position>& marked) {
  return to_string(PositionSet{{}, marked});
}

std::ostream& operator<<(std::ostream& out, const PositionSet& s) {
  bool first = true;
  out << '{';
  write_items(out, s.constants, first, [](const std::string& c) { return c; });
  write_items(out, s.marked, first, [](const Position& p) { return p.name(); });
  out << '}';
  return out;
}

}  // namespace treepos
