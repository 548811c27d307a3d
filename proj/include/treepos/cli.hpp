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

#ifndef TREEPOS_CLI_HPP_
#define TREEPOS_CLI_HPP_

#include <ostream>
#include <string>

#include "treepos/parser.hpp"

namespace treepos {

enum class FollowAlgorithm { kNaive, kDecomposed, kGamma, kZpc, kImproved };

// Parses "naive", "decomposed", "gamma", "zpc" or "improved".
FollowAlgorithm parse_follow_algorithm(const std::string& name);

// "First = {...}", "Last = {...}" and one "Follow(f1, 1) = {...}" line per
// (position, child index), in mark order.
std::string follow_report(const ExpressionFile& input, FollowAlgorithm algo);

// Entry point of the treepos executable. Machine-readable output goes to
// `out`, diagnostics to `err`. Returns the process exit code: 0 on success,
// 1 for a negative answer (rejected tree, failed check), 2 for bad input.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace treepos

#endif  // TREEPOS_CLI_HPP_
