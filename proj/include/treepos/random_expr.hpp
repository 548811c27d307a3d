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

#ifndef TREEPOS_RANDOM_EXPR_HPP_
#define TREEPOS_RANDOM_EXPR_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "treepos/alphabet.hpp"
#include "treepos/expr.hpp"

namespace treepos {

struct RandomExprOptions {
  // Upper bound on expr_depth of the result.
  int max_depth = 5;
  // Upper bound on occurrences of rank >= 1 symbols.
  int max_width = 5;
  // Whether 0 may appear as a leaf.
  bool allow_empty = false;
  std::vector<std::string> constants{"a", "b", "c"};
  std::vector<std::pair<std::string, int>> functions{
      {"f", 1}, {"g", 2}, {"h", 3}};
};

// Seeded generator of random expressions. Node kinds are drawn from a fixed
// distribution while the depth budget lasts; the same seed and options yield
// the same sequence on every platform.
class RandomExprGenerator {
 public:
  explicit RandomExprGenerator(std::uint64_t seed,
                               RandomExprOptions options = {});

  TreeExpr next();
  const RankedAlphabet& alphabet() const { return alphabet_; }
  const RandomExprOptions& options() const { return options_; }

 private:
  TreeExpr generate(int depth, int& width);
  TreeExpr leaf();
  std::string annotation(const TreeExpr& operand);
  // Uniform in [0, n).
  std::size_t pick(std::size_t n);

  RandomExprOptions options_;
  RankedAlphabet alphabet_;
  std::mt19937_64 rng_;
};

}  // namespace treepos

#endif  // TREEPOS_RANDOM_EXPR_HPP_
