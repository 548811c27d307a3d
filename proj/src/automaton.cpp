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

#include "treepos/automaton.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "treepos/linearize.hpp"
#include "treepos/zpc.hpp"

namespace treepos {

std::string state_name(const Position& p, int k) {
  return p.name() + "^" + std::to_string(k);
}

std::string to_string(const Rule& r) {
  std::string out = r.symbol;
  if (!r.args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < r.args.size(); ++i) {
      if (i > 0) out += ",";
      out += r.args[i];
    }
    out += ")";
  }
  return out + " -> " + r.target;
}

Nfta::Nfta(RankedAlphabet alphabet, std::vector<std::string> states,
           std::set<std::string> final, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      final_(std::move(final)),
      rules_(std::move(rules)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!state_index_.emplace(states_[i], static_cast<int>(i)).second) {
      throw Error("duplicate state '" + states_[i] + "'");
    }
  }
  for (const auto& q : final_) {
    if (!state_index_.count(q)) throw Error("unknown final state '" + q + "'");
  }
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  for (const auto& r : rules_) {
    auto rank = alphabet_.rank(r.symbol);
    if (!rank) throw Error("rule uses undeclared symbol '" + r.symbol + "'");
    if (static_cast<std::size_t>(*rank) != r.args.size()) {
      throw Error("rule " + to_string(r) + " does not match rank " +
                  std::to_string(*rank));
    }
    std::vector<int> args;
    for (const auto& q : r.args) {
      auto it = state_index_.find(q);
      if (it == state_index_.end()) throw Error("unknown state '" + q + "'");
      args.push_back(it->second);
    }
    auto target = state_index_.find(r.target);
    if (target == state_index_.end()) {
      throw Error("unknown state '" + r.target + "'");
    }
    by_symbol_[r.symbol].emplace_back(std::move(args), target->second);
  }
}

Nfta::StateBits Nfta::run(const GroundTree& t) const {
  auto rank = alphabet_.rank(t.symbol);
  if (!rank) throw Error("unknown symbol '" + t.symbol + "'");
  if (static_cast<std::size_t>(*rank) != t.children.size()) {
    throw Error("symbol '" + t.symbol + "' expects " + std::to_string(*rank) +
                " children");
  }
  std::vector<StateBits> below;
  below.reserve(t.children.size());
  for (const auto& child : t.children) below.push_back(run(child));
  StateBits out(states_.size(), false);
  auto it = by_symbol_.find(t.symbol);
  if (it == by_symbol_.end()) return out;
  for (const auto& [args, target] : it->second) {
    bool fires = true;
    for (std::size_t i = 0; i < args.size() && fires; ++i) {
      fires = below[i][static_cast<std::size_t>(args[i])];
    }
    if (fires) out[static_cast<std::size_t>(target)] = true;
  }
  return out;
}

std::set<std::string> Nfta::reached(const GroundTree& t) const {
  StateBits bits = run(t);
  std::set<std::string> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.insert(states_[i]);
  }
  return out;
}

bool Nfta::accepts(const GroundTree& t) const {
  StateBits bits = run(t);
  for (const auto& q : final_) {
    if (bits[static_cast<std::size_t>(state_index_.at(q))]) return true;
  }
  return false;
}

unsigned __int128 Nfta::count_accepted(int max_depth) const {
  using Count = unsigned __int128;
  using Classes = std::map<StateBits, Count>;
  const std::size_t n = states_.size();

  // Trees of depth 1, grouped by Delta*.
  Classes leaves;
  for (const auto& c : alphabet_.constants()) {
    StateBits bits(n, false);
    if (auto it = by_symbol_.find(c); it != by_symbol_.end()) {
      for (const auto& rule : it->second) {
        bits[static_cast<std::size_t>(rule.second)] = true;
      }
    }
    leaves[bits] += 1;
  }

  Classes level = leaves;
  for (int depth = 2; depth <= max_depth; ++depth) {
    Classes next = leaves;
    for (const auto& f : alphabet_.functions()) {
      const std::size_t arity =
          static_cast<std::size_t>(alphabet_.rank_of(f));
      static const std::vector<std::pair<std::vector<int>, int>> kNoRules;
      auto found = by_symbol_.find(f);
      const auto& rules = found == by_symbol_.end() ? kNoRules : found->second;

      // Only states used as the i-th argument of some f-rule matter there.
      std::vector<std::vector<std::pair<StateBits, Count>>> projected(arity);
      for (std::size_t i = 0; i < arity; ++i) {
        StateBits relevant(n, false);
        for (const auto& rule : rules) {
          relevant[static_cast<std::size_t>(rule.first[i])] = true;
        }
        Classes grouped;
        for (const auto& [bits, count] : level) {
          StateBits p(n, false);
          for (std::size_t q = 0; q < n; ++q) p[q] = bits[q] && relevant[q];
          grouped[p] += count;
        }
        projected[i].assign(grouped.begin(), grouped.end());
      }

      std::vector<std::size_t> choice(arity, 0);
      std::function<void(std::size_t, Count)> expand = [&](std::size_t i,
                                                           Count weight) {
        if (i == arity) {
          StateBits target(n, false);
          for (const auto& [args, q] : rules) {
            bool fires = true;
            for (std::size_t j = 0; j < arity && fires; ++j) {
              fires = projected[j][choice[j]]
                          .first[static_cast<std::size_t>(args[j])];
            }
            if (fires) target[static_cast<std::size_t>(q)] = true;
          }
          next[target] += weight;
          return;
        }
        for (std::size_t c = 0; c < projected[i].size(); ++c) {
          choice[i] = c;
          expand(i + 1, weight * projected[i][c].second);
        }
      };
      expand(0, 1);
    }
    level = std::move(next);
  }

  Count accepted = 0;
  for (const auto& [bits, count] : level) {
    for (const auto& q : final_) {
      if (bits[static_cast<std::size_t>(state_index_.at(q))]) {
        accepted += count;
        break;
      }
    }
  }
  return accepted;
}

Nfta build_position_automaton(const TreeExpr& e,
                              const RankedAlphabet& alphabet) {
  RankedAlphabet sigma = alphabet;
  const RankedAlphabet used = infer_alphabet(e);
  for (const auto& [name, rank] : used.symbols()) {
    sigma.add(name, rank);
  }
  LinearizedExpr lin = linearize(normalize_stars(e), sigma);
  ZpcStructure z = build_zpc(lin);
  FollowMap follow = follow_all(lin);

  std::vector<std::string> states{kFinalState};
  for (const auto& info : lin.positions()) {
    for (int k = 1; k <= info.rank; ++k) {
      states.push_back(state_name(info.position, k));
    }
  }

  std::vector<Rule> rules;
  auto emit = [&](const PositionSet& symbols, const std::string& target) {
    for (const auto& c : symbols.constants) rules.push_back({c, {}, target});
    for (const auto& g : symbols.marked) {
      Rule r{lin.unmark(g.mark), {}, target};
      for (int k = 1; k <= lin.find(g.mark)->rank; ++k) {
        r.args.push_back(state_name(g, k));
      }
      rules.push_back(std::move(r));
    }
  };
  emit(z.first(z.root()), kFinalState);
  for (const auto& [key, symbols] : follow) {
    emit(symbols, state_name(key.first, key.second));
  }
  return Nfta(std::move(sigma), std::move(states), {kFinalState},
              std::move(rules));
}

Nfta build_position_automaton(const TreeExpr& e) {
  return build_position_automaton(e, RankedAlphabet{});
}

namespace {

std::string to_json(const Nfta& a) {
  nlohmann::ordered_json out;
  out["alphabet"] = nlohmann::ordered_json::array();
  for (const auto& [name, rank] : a.alphabet().symbols()) {
    out["alphabet"].push_back({{"symbol", name}, {"rank", rank}});
  }
  out["states"] = a.states();
  out["final"] = a.final();
  out["rules"] = nlohmann::ordered_json::array();
  for (const auto& r : a.rules()) {
    out["rules"].push_back(
        {{"symbol", r.symbol}, {"args", r.args}, {"target", r.target}});
  }
  return out.dump(2) + "\n";
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Rank-0 rules enter from a plaintext label; rank-1 rules are labelled edges;
// higher ranks fan in through a point node.
std::string to_dot(const Nfta& a) {
  std::ostringstream out;
  out << "digraph nfta {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& q : a.states()) {
    out << "  " << quoted(q);
    if (a.final().count(q)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (std::size_t i = 0; i < a.rules().size(); ++i) {
    const Rule& r = a.rules()[i];
    const std::string aux = quoted("r" + std::to_string(i));
    if (r.args.empty()) {
      out << "  " << aux << " [shape=plaintext, label=" << quoted(r.symbol)
          << "];\n  " << aux << " -> " << quoted(r.target) << ";\n";
    } else if (r.args.size() == 1) {
      out << "  " << quoted(r.args[0]) << " -> " << quoted(r.target)
          << " [label=" << quoted(r.symbol) << "];\n";
    } else {
      out << "  " << aux << " [shape=point];\n";
      for (std::size_t k = 0; k < r.args.size(); ++k) {
        out << "  " << quoted(r.args[k]) << " -> " << aux
            << " [arrowhead=none, label=" << quoted(std::to_string(k + 1))
            << "];\n";
      }
      out << "  " << aux << " -> " << quoted(r.target)
          << " [label=" << quoted(r.symbol) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const Nfta& a) {
  std::ostringstream out;
  out << "states:";
  for (const auto& q : a.states()) out << ' ' << q;
  out << "\nfinal:";
  for (const auto& q : a.final()) out << ' ' << q;
  out << "\nrules: " << a.rules().size() << '\n';
  for (const auto& r : a.rules()) out << "  " << to_string(r) << '\n';
  return out.str();
}

}  // namespace

std::string export_automaton(const Nfta& a, AutomatonFormat format) {
  switch (format) {
    case AutomatonFormat::kJson:
      return to_json(a);
    case AutomatonFormat::kDot:
      return to_dot(a);
    case AutomatonFormat::kText:
      return to_text(a);
  }
  return {};
}

Nfta import_automaton_json(const std::string& text) {
  try {
    auto in = nlohmann::json::parse(text);
    RankedAlphabet alphabet;
    for (const auto& entry : in.at("alphabet")) {
      alphabet.add(entry.at("symbol").get<std::string>(),
                   entry.at("rank").get<int>());
    }
    std::vector<Rule> rules;
    for (const auto& entry : in.at("rules")) {
      rules.push_back({entry.at("symbol").get<std::string>(),
                       entry.at("args").get<std::vector<std::string>>(),
                       entry.at("target").get<std::string>()});
    }
    return Nfta(std::move(alphabet),
                in.at("states").get<std::vector<std::string>>(),
                in.at("final").get<std::set<std::string>>(), std::move(rules));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed automaton JSON: ") + e.what());
  }
}

}  // namespace treepos
