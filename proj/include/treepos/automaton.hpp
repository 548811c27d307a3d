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

#ifndef TREEPOS_AUTOMATON_HPP_
#define TREEPOS_AUTOMATON_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "treepos/alphabet.hpp"
#include "treepos/expr.hpp"
#include "treepos/ground_tree.hpp"

namespace treepos {

// Name of the unique final state.
inline constexpr const char* kFinalState = "eps1";

// "f1^1", "g3^2".
std::string state_name(const Position& p, int k);

// g(q1, ..., qn) -> target. Constant rules have no arguments.
struct Rule {
  std::string symbol;
  std::vector<std::string> args;
  std::string target;

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

// "f(f1^1) -> eps1", "a -> g3^2".
std::string to_string(const Rule& r);

// Bottom-up nondeterministic finite tree automaton over a ranked alphabet.
// States are named; rules are kept sorted by (symbol, args, target).
class Nfta {
 public:
  Nfta() = default;
  // Throws Error when a rule uses an undeclared state or symbol, or a symbol
  // with the wrong number of arguments.
  Nfta(RankedAlphabet alphabet, std::vector<std::string> states,
       std::set<std::string> final, std::vector<Rule> rules);

  const RankedAlphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::set<std::string>& final() const { return final_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // Delta*(t). Throws Error on a symbol outside the alphabet or of the wrong
  // arity.
  std::set<std::string> reached(const GroundTree& t) const;
  bool accepts(const GroundTree& t) const;

  // Number of accepted trees over the alphabet of depth <= max_depth
  // (a constant has depth 1). Exact up to 2^128.
  unsigned __int128 count_accepted(int max_depth) const;

 private:
  using StateBits = std::vector<bool>;
  StateBits run(const GroundTree& t) const;

  RankedAlphabet alphabet_;
  std::vector<std::string> states_;
  std::set<std::string> final_;
  std::vector<Rule> rules_;
  std::map<std::string, int, std::less<>> state_index_;
  // Per symbol: (argument state ids, target id).
  std::map<std::string, std::vector<std::pair<std::vector<int>, int>>,
           std::less<>>
      by_symbol_;
};

// The k-position automaton: one state per (position, child index) plus the
// final state; a rule into eps1 for every symbol of First, a rule into f_j^k
// for every symbol of Follow(f_j, k). Star-normalizes and linearizes
// internally; Follow sets come from follow_all. The alphabet defaults to the
// symbols occurring in e.
Nfta build_position_automaton(const TreeExpr& e, const RankedAlphabet& alphabet);
Nfta build_position_automaton(const TreeExpr& e);

enum class AutomatonFormat { kJson, kDot, kText };

std::string export_automaton(const Nfta& a, AutomatonFormat format);
// Inverse of the JSON export. Throws Error on malformed input.
Nfta import_automaton_json(const std::string& text);

}  // namespace treepos

#endif  // TREEPOS_AUTOMATON_HPP_
