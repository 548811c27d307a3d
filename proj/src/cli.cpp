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

#include "treepos/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "treepos/automaton.hpp"
#include "treepos/bench.hpp"
#include "treepos/linearize.hpp"
#include "treepos/oracle_check.hpp"
#include "treepos/positions.hpp"
#include "treepos/random_expr.hpp"
#include "treepos/zpc.hpp"

namespace treepos {

FollowAlgorithm parse_follow_algorithm(const std::string& name) {
  if (name == "naive") return FollowAlgorithm::kNaive;
  if (name == "decomposed") return FollowAlgorithm::kDecomposed;
  if (name == "gamma") return FollowAlgorithm::kGamma;
  if (name == "zpc") return FollowAlgorithm::kZpc;
  if (name == "improved") return FollowAlgorithm::kImproved;
  throw Error("unknown algorithm '" + name + "'");
}

std::string follow_report(const ExpressionFile& input, FollowAlgorithm algo) {
  LinearizedExpr lin =
      linearize(normalize_stars(input.expr), input.alphabet);
  std::ostringstream out;
  out << "First = " << first_naive(lin) << '\n';
  out << "Last = " << to_string(last_naive(lin)) << '\n';

  std::optional<ZpcStructure> z;
  FollowMap all;
  if (algo == FollowAlgorithm::kGamma || algo == FollowAlgorithm::kZpc) {
    z.emplace(build_zpc(lin));
  } else if (algo == FollowAlgorithm::kImproved) {
    all = follow_all(lin);
  }
  for (const auto& info : lin.positions()) {
    const Position& f = info.position;
    for (int k = 1; k <= info.rank; ++k) {
      PositionSet s;
      switch (algo) {
        case FollowAlgorithm::kNaive:
          s = follow_naive(lin, f, k);
          break;
        case FollowAlgorithm::kDecomposed:
          s = follow_decomposed(lin, f, k);
          break;
        case FollowAlgorithm::kGamma:
          s = follow_via_gamma(*z, f, k);
          break;
        case FollowAlgorithm::kZpc:
          s = follow_fast(*z, f, k);
          break;
        case FollowAlgorithm::kImproved:
          s = all.at({f, k});
          break;
      }
      out << "Follow(" << f.name() << ", " << k << ") = " << s << '\n';
    }
  }
  return out.str();
}

namespace {

struct Source {
  std::string path;
  std::string inline_expr;
};

void add_source(CLI::App* cmd, Source& source) {
  auto* file = cmd->add_option("input", source.path, "Expression file");
  auto* expr = cmd->add_option("-e,--expr", source.inline_expr,
                               "Inline expression (ranks inferred)");
  file->excludes(expr);
  expr->excludes(file);
}

ExpressionFile load(const Source& source) {
  if (!source.inline_expr.empty()) {
    ExpressionFile f;
    f.expr = parse_expression(source.inline_expr);
    f.alphabet = infer_alphabet(f.expr);
    return f;
  }
  if (source.path.empty()) throw Error("no expression given");
  return read_expression_file(source.path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

AutomatonFormat parse_format(const std::string& name) {
  if (name == "json") return AutomatonFormat::kJson;
  if (name == "dot") return AutomatonFormat::kDot;
  if (name == "text") return AutomatonFormat::kText;
  throw Error("unknown format '" + name + "'");
}

std::string zpc_text(const ZpcStructure& z) {
  std::ostringstream out;
  out << "nodes: " << z.size() << '\n';
  for (const auto& n : z.nodes()) {
    out << "  " << n.id << ' ' << to_string(z.subexpr(n.id));
    out << "  first0=" << to_string(z.constants_of(n.first0));
    if (n.gamma >= 0) out << "  gamma=" << n.gamma;
    if (!n.in_forest) out << "  deleted";
    if (!n.live) out << "  dead";
    out << '\n';
  }
  out << "removed links:";
  for (const auto& cut : z.removed_links()) {
    out << ' ' << cut.parent << "->" << cut.child;
  }
  out << "\ngamma links:";
  for (const auto& [from, to] : z.gamma_links()) {
    out << ' ' << from << "->" << to;
  }
  out << '\n';
  return out.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Position automata for regular tree expressions", "treepos"};
  app.require_subcommand(1);

  Source source;
  std::string algo = "improved";
  std::string format = "json";
  std::string automaton_path;
  std::string tree_text;
  std::string output_path;
  bool check = false;
  bool verbose = false;
  int depth = 4;
  int width = 5;
  int tree_depth = 4;
  std::size_t max_trees = 1000000;
  std::uint64_t seed = 42;
  int count = 100;
  int min_n = 4;
  int max_n = 64;
  int runs = 3;

  auto* follow = app.add_subcommand("follow", "Print First, Last and Follow");
  add_source(follow, source);
  follow->add_option("--algo", algo, "naive|decomposed|gamma|zpc|improved")
      ->check(CLI::IsMember({"naive", "decomposed", "gamma", "zpc", "improved"}));

  auto* automaton = app.add_subcommand("automaton", "Build the automaton");
  add_source(automaton, source);
  automaton->add_option("--format", format, "json|dot|text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  automaton->add_option("-o,--output", output_path, "Write to a file");
  automaton->add_flag("--check", check,
                      "Compare with the enumerated language");
  automaton->add_option("--depth", tree_depth, "Tree depth bound of --check")
      ->check(CLI::PositiveNumber);
  automaton->add_option("--max-trees", max_trees,
                        "Enumeration cap of --check");

  auto* accept = app.add_subcommand("accept", "Run an automaton on a tree");
  accept->add_option("automaton", automaton_path, "Automaton JSON")
      ->required();
  accept->add_option("tree", tree_text, "Tree literal, e.g. g(b,a)")
      ->required();
  accept->add_flag("--verbose", verbose, "Print the reached states");

  auto* oracle = app.add_subcommand("oracle-check", "Random cross-checks");
  oracle->add_option("--seed", seed, "Generator seed");
  oracle->add_option("--count", count, "Expressions to check")->check(CLI::NonNegativeNumber);
  oracle->add_option("--depth", depth, "Expression depth bound")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--width", width, "Expression width bound")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--tree-depth", tree_depth,
                     "Language comparison depth, 0 to skip")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--max-trees", max_trees,
                     "Enumeration cap; larger languages are redrawn");

  auto* bench = app.add_subcommand("bench", "Scaling benchmark as CSV");
  bench->add_option("--min-n", min_n, "Smallest family index");
  bench->add_option("--max-n", max_n, "Largest family index");
  bench->add_option("--runs", runs, "Timed runs per point")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Print random expressions");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--count", count, "Expressions to print")->check(CLI::NonNegativeNumber);
  gen->add_option("--depth", depth, "Expression depth bound")->check(CLI::PositiveNumber);
  gen->add_option("--width", width, "Expression width bound")->check(CLI::NonNegativeNumber);

  auto* zpc = app.add_subcommand("zpc", "Dump the decorated syntax tree");
  add_source(zpc, source);
  zpc->add_option("--format", format, "text|dot")
      ->check(CLI::IsMember({"text", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (follow->parsed()) {
      out << follow_report(load(source), parse_follow_algorithm(algo));
      return 0;
    }
    if (automaton->parsed()) {
      ExpressionFile input = load(source);
      Nfta a = build_position_automaton(input.expr, input.alphabet);
      std::string text = export_automaton(a, parse_format(format));
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path);
        if (!(file << text)) throw Error("cannot write '" + output_path + "'");
      }
      if (!check) return 0;
      LanguageCheck lc =
          check_language(input.expr, input.alphabet, tree_depth, max_trees);
      if (lc.truncated) {
        err << "oracle check: SKIPPED (more than " << max_trees
            << " trees)\n";
        return 1;
      }
      if (lc.mismatch) {
        err << "oracle check: FAIL (" << *lc.mismatch << ")\n";
        return 1;
      }
      err << "oracle check: PASS (" << lc.trees << " trees)\n";
      return 0;
    }
    if (accept->parsed()) {
      Nfta a = import_automaton_json(read_file(automaton_path));
      GroundTree t = parse_tree(tree_text, a.alphabet());
      if (verbose) {
        std::set<std::string> reached = a.reached(t);
        out << "reached: {";
        bool first = true;
        for (const auto& q : reached) {
          out << (first ? "" : ", ") << q;
          first = false;
        }
        out << "}\n";
      }
      bool accepted = a.accepts(t);
      out << (accepted ? "accepted" : "rejected") << '\n';
      return accepted ? 0 : 1;
    }
    if (oracle->parsed()) {
      OracleOptions options;
      options.seed = seed;
      options.count = count;
      options.max_depth = depth;
      options.max_width = width;
      options.tree_depth = tree_depth;
      options.max_trees = max_trees;
      OracleReport report = run_oracle_check(options);
      if (report.passed()) {
        out << "PASS (" << report.checked << " expressions, " << report.trees
            << " trees, " << report.redrawn << " redrawn)\n";
        return 0;
      }
      out << "FAIL after " << report.checked << " expressions\n"
          << "counterexample: " << *report.counterexample << '\n'
          << "detail: " << report.detail << '\n';
      return 1;
    }
    if (bench->parsed()) {
      std::vector<BenchRow> rows;
      for (int n : doubling_range(min_n, max_n)) rows.push_back(bench_row(n, runs));
      out << bench_csv(rows);
      return 0;
    }
    if (gen->parsed()) {
      RandomExprOptions options;
      options.max_depth = depth;
      options.max_width = width;
      RandomExprGenerator g(seed, options);
      for (int i = 0; i < count; ++i) out << g.next() << '\n';
      return 0;
    }
    if (zpc->parsed()) {
      ExpressionFile input = load(source);
      ZpcStructure z =
          build_zpc(linearize(normalize_stars(input.expr), input.alphabet));
      out << (format == "dot" ? z.to_dot() : zpc_text(z));
      return 0;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace treepos
