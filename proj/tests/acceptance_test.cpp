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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "treepos/automaton.hpp"
#include "treepos/bench.hpp"
#include "treepos/language.hpp"
#include "treepos/linearize.hpp"
#include "treepos/oracle_check.hpp"
#include "treepos/parser.hpp"
#include "treepos/positions.hpp"
#include "treepos/random_expr.hpp"
#include "treepos/zpc.hpp"

namespace treepos {
namespace {

const char* kExampleAlphabet = "a:0 b:0 c:0 f:1 h:1 g:2";
const char* kExampleExpr =
    "(f(a)*a .a b + h(b))*b + g(c,a)*c .c (f(a)*a .a b + h(b))*b";

TreeExpr example_expr() {
  return parse_expression(kExampleExpr,
                          RankedAlphabet::parse(kExampleAlphabet));
}

LinearizedExpr example_linearized() {
  return linearize(normalize_stars(example_expr()),
                   RankedAlphabet::parse(kExampleAlphabet));
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Depth by which every root, leaf and adjacency of [[e]] has a witness
// tree: products stack their operands and two star iterations suffice.
int witness_depth(const TreeExpr& e) {
  switch (e.kind()) {
    case ExprKind::kEmpty:
    case ExprKind::kConstant:
      return 1;
    case ExprKind::kApply: {
      int h = 0;
      for (const auto& c : e.children()) h = std::max(h, witness_depth(c));
      return h + 1;
    }
    case ExprKind::kSum:
      return std::max(witness_depth(e.left()), witness_depth(e.right()));
    case ExprKind::kProduct:
      return witness_depth(e.left()) + witness_depth(e.right());
    case ExprKind::kStar:
      return 2 * witness_depth(e.body());
  }
  return 1;
}

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// 1. First and the six Follow sets of the worked example, by every route.
Outcome example_follow() {
  auto start = Clock::now();
  const std::string first = "{b, f1, h2, g3, f4, h5}";
  const std::map<std::pair<Position, int>, std::string> expected{
      {{{"f", 1}, 1}, "{b, f1, h2}"},
      {{{"h", 2}, 1}, "{b, f1, h2}"},
      {{{"g", 3}, 1}, "{b, g3, f4, h5}"},
      {{{"g", 3}, 2}, "{a}"},
      {{{"f", 4}, 1}, "{b, f4, h5}"},
      {{{"h", 5}, 1}, "{b, f4, h5}"},
  };
  LinearizedExpr lin = example_linearized();
  ZpcStructure z = build_zpc(lin);
  FollowMap all = follow_all(lin);

  if (to_string(first_naive(lin)) != first) return fail("First (naive)");
  if (to_string(disjoint_union(first0(lin), first_sup(lin))) != first) {
    return fail("First (decomposed)");
  }
  if (to_string(z.first(z.root())) != first) return fail("First (forest)");

  std::size_t pairs = 0;
  for (const auto& info : lin.positions()) {
    for (int k = 1; k <= info.rank; ++k) ++pairs;
  }
  if (pairs != expected.size()) return fail("wrong number of (f, k) pairs");

  const std::vector<std::pair<
      std::string, std::function<PositionSet(const Position&, int)>>>
      routes{
          {"naive", [&](const Position& f, int k) {
             return follow_naive(lin, f, k);
           }},
          {"decomposed", [&](const Position& f, int k) {
             return follow_decomposed(lin, f, k);
           }},
          {"gamma", [&](const Position& f, int k) {
             return follow_via_gamma(z, f, k);
           }},
          {"fast", [&](const Position& f, int k) {
             return follow_fast(z, f, k);
           }},
          {"improved", [&](const Position& f, int k) {
             return all.at({f, k});
           }},
      };
  for (const auto& [name, route] : routes) {
    for (const auto& [key, want] : expected) {
      std::string got = to_string(route(key.first, key.second));
      if (got != want) {
        return fail(name + ": Follow(" + key.first.name() + ", " +
                    std::to_string(key.second) + ") = " + got);
      }
    }
  }
  double t = seconds_since(start);
  if (t >= 1.0) return fail("took " + std::to_string(t) + " s");
  std::ostringstream out;
  out << "First and 6 Follow sets exact for naive, decomposed, gamma, fast, "
         "improved ("
      << t << " s)";
  return {true, out.str()};
}

// 2. The automaton of the worked example against the published rule list.
Outcome example_automaton() {
  auto start = Clock::now();
  Nfta a = build_position_automaton(example_expr(),
                                    RankedAlphabet::parse(kExampleAlphabet));
  const std::set<std::string> states{"eps1", "f1^1", "h2^1", "g3^1",
                                     "g3^2", "f4^1", "h5^1"};
  const std::set<std::string> rules{
      "f(f1^1) -> eps1", "f(f1^1) -> f1^1",  "f(f1^1) -> h2^1",
      "h(h2^1) -> eps1", "h(h2^1) -> f1^1",  "h(h2^1) -> h2^1",
      "g(g3^1,g3^2) -> g3^1", "g(g3^1,g3^2) -> eps1",
      "f(f4^1) -> eps1", "f(f4^1) -> g3^1",  "f(f4^1) -> f4^1",
      "f(f4^1) -> h5^1",
      "h(h5^1) -> eps1", "h(h5^1) -> g3^1",  "h(h5^1) -> f4^1",
      "h(h5^1) -> h5^1",
      "a -> g3^2",       "b -> eps1",        "b -> f1^1",
      "b -> h2^1",       "b -> g3^1",        "b -> f4^1",
      "b -> h5^1",
  };
  std::set<std::string> got_states(a.states().begin(), a.states().end());
  if (got_states != states || a.states().size() != 7) return fail("states");
  if (a.final() != std::set<std::string>{"eps1"}) return fail("final states");
  std::set<std::string> got;
  for (const auto& r : a.rules()) got.insert(to_string(r));
  if (got.size() != a.rules().size()) return fail("duplicate rules");
  if (got != rules) {
    std::string diff;
    for (const auto& r : got) {
      if (!rules.count(r)) diff += " +" + r;
    }
    for (const auto& r : rules) {
      if (!got.count(r)) diff += " -" + r;
    }
    return fail("rule set differs:" + diff);
  }
  double t = seconds_since(start);
  if (t >= 1.0) return fail("took " + std::to_string(t) + " s");
  std::ostringstream out;
  out << "7 states, final {eps1}, " << got.size()
      << " rules equal to the listed ones (" << t << " s)";
  return {true, out.str()};
}

// 3. L(P_E) equals the enumerated language up to tree depth 4.
Outcome language_equality() {
  auto start = Clock::now();
  RandomExprOptions o;
  o.max_depth = 5;
  o.max_width = 5;
  RandomExprGenerator gen(2024, o);
  const std::size_t cap = 200000;
  int checked = 0;
  int redrawn = 0;
  std::size_t trees = 0;
  while (checked < 500) {
    TreeExpr e = gen.next();
    LanguageCheck lc = check_language(e, gen.alphabet(), 4, cap);
    if (lc.truncated) {
      ++redrawn;
      continue;
    }
    if (lc.mismatch) {
      std::ostringstream out;
      out << e << ": " << *lc.mismatch;
      return fail(out.str());
    }
    ++checked;
    trees += lc.trees;
  }
  double t = seconds_since(start);
  if (t >= 300) return fail("took " + std::to_string(t) + " s");
  std::ostringstream out;
  out << checked << " expressions, " << trees
      << " language trees, 0 mismatches, " << redrawn
      << " redrawn over the " << cap << "-tree cap (" << t << " s)";
  return {true, out.str()};
}

// 4. Every Follow route agrees on every (f, k), and the splits hold.
Outcome algorithm_equivalence() {
  auto start = Clock::now();
  RandomExprOptions o;
  o.max_depth = 6;
  o.max_width = 8;
  RandomExprGenerator gen(4242, o);
  std::size_t pairs = 0;
  for (int i = 0; i < 1000; ++i) {
    TreeExpr e = gen.next();
    LinearizedExpr lin = linearize(normalize_stars(e), gen.alphabet());
    ZpcStructure z = build_zpc(lin);
    FollowMap all = follow_all(lin);
    std::ostringstream where;
    where << lin.expr();
    PositionSet first = first_naive(lin);
    if (first != disjoint_union(first0(lin), first_sup(lin)) ||
        first != z.first(z.root())) {
      return fail("First split on " + where.str());
    }
    for (const auto& info : lin.positions()) {
      const Position& f = info.position;
      for (int k = 1; k <= info.rank; ++k) {
        PositionSet naive = follow_naive(lin, f, k);
        std::set<std::string> las = last_follow(lin, f, k);
        std::set<Position> fw = follow_sup(lin, f, k);
        if (naive.constants != las || naive.marked != fw) {
          return fail("Follow split on " + where.str());
        }
        if (follow_via_gamma(z, f, k) != naive || follow_fast(z, f, k) != naive ||
            all.at({f, k}) != naive) {
          return fail("Follow(" + f.name() + ", " + std::to_string(k) +
                      ") on " + where.str());
        }
        ++pairs;
      }
    }
  }
  double t = seconds_since(start);
  if (t >= 300) return fail("took " + std::to_string(t) + " s");
  std::ostringstream out;
  out << "1000 expressions, " << pairs
      << " (f, k) pairs, naive = decomposed = gamma = fast = improved (" << t
      << " s)";
  return {true, out.str()};
}

// 5. First and Last against root and leaf sets of the enumerated language,
//    compared once two consecutive depth bounds give the same sets.
Outcome grounding() {
  auto start = Clock::now();
  RandomExprOptions o;
  o.max_depth = 4;
  o.max_width = 4;
  RandomExprGenerator gen(777, o);
  int checked = 0;
  int unsettled = 0;
  while (checked < 200) {
    TreeExpr e = gen.next();
    LinearizedExpr lin = linearize(normalize_stars(e), gen.alphabet());
    std::set<std::string> first;
    for (const auto& c : first0(lin)) first.insert(c);
    for (const auto& p : first_sup(lin)) first.insert(p.name());
    {
      PositionSet naive = first_naive(lin);
      std::set<std::string> flat(naive.constants.begin(),
                                 naive.constants.end());
      for (const auto& p : naive.marked) flat.insert(p.name());
      if (flat != first) return fail("First split");
    }
    std::set<std::string> last = last_naive(lin);

    std::pair<std::set<std::string>, std::set<std::string>> previous;
    bool settled = false;
    for (int d = 1; d <= 10 && !settled; ++d) {
      LanguageSample sample = enumerate_language(lin.expr(), d, 100000);
      if (sample.truncated) break;
      std::pair<std::set<std::string>, std::set<std::string>> seen;
      for (const auto& t : sample.trees) {
        seen.first.insert(t.label());
        seen.second.merge(t.leaves());
      }
      std::ostringstream where;
      where << lin.expr() << " at depth " << d;
      for (const auto& s : seen.first) {
        if (!first.count(s)) return fail("root " + s + " missing, " + where.str());
      }
      for (const auto& s : seen.second) {
        if (!last.count(s)) return fail("leaf " + s + " missing, " + where.str());
      }
      // Settled: past the witness depth and unchanged from the last depth.
      if (d > witness_depth(lin.expr()) && seen == previous) {
        if (seen.first != first) return fail("First differs on " + where.str());
        if (seen.second != last) return fail("Last differs on " + where.str());
        settled = true;
      }
      previous = std::move(seen);
    }
    if (!settled) {
      ++unsettled;
      continue;
    }
    ++checked;
  }
  std::ostringstream out;
  out << checked << " expressions settled and equal, " << unsettled
      << " redrawn without settling (" << seconds_since(start) << " s)";
  return {true, out.str()};
}

// 6. follow_all scales like |E| * ||E|| and outpaces the naive route.
Outcome scaling() {
  auto start = Clock::now();
  std::vector<BenchRow> rows;
  for (int n : {8, 16, 32, 64}) rows.push_back(bench_row(n, 5));
  std::ostringstream out;
  out.precision(3);
  bool ok = true;
  out << "improved ns:";
  for (const auto& r : rows) out << ' ' << r.t_improved_ns;
  out << "; doubling ratios";
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double ratio = rows[i].t_improved_ns / rows[i - 1].t_improved_ns;
    out << ' ' << ratio;
    if (i >= rows.size() - 2 && (ratio < 2.0 || ratio > 6.0)) ok = false;
  }
  out << "; naive/improved";
  std::vector<double> speedup;
  for (const auto& r : rows) {
    speedup.push_back(r.t_naive_ns / r.t_improved_ns);
    out << ' ' << speedup.back();
  }
  const std::size_t last = speedup.size() - 1;
  if (speedup[last] <= 1.0 || speedup[last] <= speedup[last - 1] ||
      speedup[last - 1] <= speedup[last - 2]) {
    ok = false;
  }
  double t = seconds_since(start);
  if (t >= 120) ok = false;
  out << " (" << t << " s)";
  return {ok, out.str()};
}

// 7. The decorated syntax tree of the worked example.
Outcome zpc_structure() {
  LinearizedExpr lin = example_linearized();
  ZpcStructure z = build_zpc(lin);
  auto text = [&](int id) { return to_string(z.subexpr(id)); };

  std::multiset<std::string> gammas;
  for (const auto& [from, to] : z.gamma_links()) {
    const ZpcNode& father = z.node(z.node(from).parent);
    const char* kind = father.kind == ExprKind::kStar ? "star" : "product";
    gammas.insert(std::string(kind) + " " + text(from) + " => " + text(to));
  }
  const std::string left = "((f1(a) + a)*a .a b + h2(b) + b)*b";
  const std::string right = "((f4(a) + a)*a .a b + h5(b) + b)*b";
  const std::multiset<std::string> expected_gammas{
      "star (f1(a) + a)*a .a b + h2(b) + b => " + left,
      "star f1(a) + a => (f1(a) + a)*a",
      "product (f1(a) + a)*a => b",
      "star g3(c,a) + c => (g3(c,a) + c)*c",
      "product (g3(c,a) + c)*c => " + right,
      "star (f4(a) + a)*a .a b + h5(b) + b => " + right,
      "star f4(a) + a => (f4(a) + a)*a",
      "product (f4(a) + a)*a => b",
  };
  if (gammas != expected_gammas) return fail("gamma links differ");

  std::multiset<std::string> cuts;
  int product_cuts = 0;
  for (const auto& cut : z.removed_links()) {
    if (cut.reason == CutReason::kProductRight) ++product_cuts;
    cuts.insert(text(cut.parent) + " -/-> " + text(cut.child));
  }
  const std::multiset<std::string> expected_cuts{
      "f1(a) -/-> a", "h2(b) -/-> b",  "g3(c,a) -/-> c",
      "g3(c,a) -/-> a", "f4(a) -/-> a", "h5(b) -/-> b",
  };
  if (product_cuts != 0) return fail("unexpected product link removal");
  if (cuts != expected_cuts) return fail("removed forest links differ");

  int deleted = 0;
  for (const auto& n : z.nodes()) {
    if (n.in_forest == (n.kind == ExprKind::kConstant)) {
      return fail("forest membership of node " + std::to_string(n.id));
    }
    deleted += n.in_forest ? 0 : 1;
  }
  if (deleted != 13) return fail("deleted leaves: " + std::to_string(deleted));
  if (gamma_chain(z, *z.node_of({"f", 4})).size() != 3) {
    return fail("chain of f4");
  }
  return {true,
          "8 gamma links (5 star, 3 product) at the expected endpoints, 6 "
          "Apply links and 0 product links removed, 13 leaves deleted"};
}

}  // namespace
}  // namespace treepos

int main() {
  using treepos::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>>
      criteria{
          {"1 worked example First/Follow", treepos::example_follow},
          {"2 worked example automaton", treepos::example_automaton},
          {"3 automaton language = enumerated language",
           treepos::language_equality},
          {"4 Follow algorithm equivalence", treepos::algorithm_equivalence},
          {"5 First/Last grounded in the language", treepos::grounding},
          {"6 scaling of follow_all", treepos::scaling},
          {"7 decorated syntax tree counts", treepos::zpc_structure},
      };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%s] %s\n", o.pass ? "PASS" : "FAIL", name,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
