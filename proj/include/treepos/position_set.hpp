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

#ifndef TREEPOS_POSITION_SET_HPP_
#define TREEPOS_POSITION_SET_HPP_

#include <ostream>
#include <set>
#include <string>

#include "treepos/expr.hpp"

namespace treepos {

// A set of positions split into its constant part and its marked (rank >= 1)
// part. The two parts are disjoint by construction. Iteration order is
// canonical: constants by name, then positions by mark.
struct PositionSet {
  std::set<std::string> constants;
  std::set<Position> marked;

  bool empty() const { return constants.empty() && marked.empty(); }
  std::size_t size() const { return constants.size() + marked.size(); }
  bool contains(const std::string& constant) const {
    return constants.count(constant) > 0;
  }
  bool contains(const Position& p) const { return marked.count(p) > 0; }

  PositionSet& operator|=(const PositionSet& other);

  // S .c S' = (S \ {c}) u S' when c is in S, S otherwise.
  PositionSet c_product(const std::string& c, const PositionSet& next) const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;
};

// Disjoint union of a constant part and a marked part.
PositionSet disjoint_union(std::set<std::string> constants,
                           std::set<Position> marked);

// "{b, f1, h2}".
std::string to_string(const PositionSet& s);
std::string to_string(const std::set<std::string>& constants);
std::string to_string(const std::set<Position>& marked);
std::ostream& operator<<(std::ostream& out, const PositionSet& s);

}  // namespace treepos

#endif  // TREEPOS_POSITION_SET_HPP_
