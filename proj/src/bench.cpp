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

#include "treepos/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

#include "treepos/linearize.hpp"
#include "treepos/positions.hpp"
#include "treepos/zpc.hpp"

namespace treepos {

namespace {

TreeExpr block() {
  using E = TreeExpr;
  E fa = E::star(E::apply("f", {E::constant("a")}), "a");
  E left = E::product(fa, "a", E::constant("b"));
  return E::star(E::sum(left, E::apply("h", {E::constant("b")})), "b");
}

}  // namespace

TreeExpr bench_family(int n) {
  if (n < 1) throw Error("family index must be positive");
  TreeExpr e = block();
  for (int i = 2; i <= n; ++i) e = TreeExpr::product(e, "b", block());
  return e;
}

RankedAlphabet bench_alphabet() {
  return RankedAlphabet{{"a", 0}, {"b", 0}, {"f", 1}, {"h", 1}};
}

double time_ns(const std::function<void()>& work, int runs,
               double min_run_ns) {
  using Clock = std::chrono::steady_clock;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(runs, 1); ++r) {
    long reps = 0;
    auto start = Clock::now();
    double elapsed = 0;
    do {
      work();
      ++reps;
      elapsed = std::chrono::duration<double, std::nano>(Clock::now() - start)
                    .count();
    } while (elapsed < min_run_ns);
    best = std::min(best, elapsed / static_cast<double>(reps));
  }
  return best;
}

BenchRow bench_row(int n, int runs) {
  TreeExpr e = bench_family(n);
  Measure m = measure(e);
  LinearizedExpr lin = linearize(normalize_stars(e), bench_alphabet());

  BenchRow row;
  row.n = n;
  row.size = m.size;
  row.width = m.width;
  std::size_t sink = 0;
  row.t_naive_ns = time_ns(
      [&] {
        for (const auto& info : lin.positions()) {
          for (int k = 1; k <= info.rank; ++k) {
            sink += follow_naive(lin, info.position, k).size();
          }
        }
      },
      runs);
  row.t_improved_ns = time_ns([&] { sink += follow_all(lin).size(); }, runs);
  // Keeps the timed calls observable.
  if (sink == std::numeric_limits<std::size_t>::max()) row.size = -1;
  return row;
}

std::vector<int> doubling_range(int min, int max) {
  std::vector<int> out;
  if (min < 1) return out;
  for (long n = min; n <= max; n *= 2) out.push_back(static_cast<int>(n));
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,size,width,t_naive_ns,t_improved_ns\n";
  char line[128];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%d,%d,%d,%.0f,%.0f\n", r.n, r.size,
                  r.width, r.t_naive_ns, r.t_improved_ns);
    out += line;
  }
  return out;
}

}  // namespace treepos
