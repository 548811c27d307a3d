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

#ifndef TREEPOS_BENCH_HPP_
#define TREEPOS_BENCH_HPP_

#include <functional>
#include <string>
#include <vector>

#include "treepos/alphabet.hpp"
#include "treepos/expr.hpp"

namespace treepos {

// The scaling family: E_1 = B and E_n = E_{n-1} .b B with the block
//   B = (f(a)*a .a b + h(b))*b
// over a:0 b:0 f:1 h:1. Both size and width grow linearly in n.
TreeExpr bench_family(int n);
RankedAlphabet bench_alphabet();

struct BenchRow {
  int n = 0;
  int size = 0;
  int width = 0;
  double t_naive_ns = 0;
  double t_improved_ns = 0;
};

// Best-of-`runs` wall time of `work` in nanoseconds. Each run repeats `work`
// until at least `min_run_ns` have elapsed and reports the mean.
double time_ns(const std::function<void()>& work, int runs = 5,
               double min_run_ns = 2e7);

// Times follow_naive over every (f_j, k) pair against follow_all on E_n.
BenchRow bench_row(int n, int runs = 5);

// min, 2min, 4min, ... up to max; empty when min > max or min < 1.
std::vector<int> doubling_range(int min, int max);

// "n,size,width,t_naive_ns,t_improved_ns" followed by one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace treepos

#endif  // TREEPOS_BENCH_HPP_
