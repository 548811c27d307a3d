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

#ifndef TREEPOS_ALPHABET_HPP_
#define TREEPOS_ALPHABET_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treepos {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A finite set of symbols, each carrying a rank (arity). Rank-0 symbols are
// the constants; everything else is a function symbol.
class RankedAlphabet {
 public:
  RankedAlphabet() = default;
  RankedAlphabet(std::initializer_list<std::pair<std::string, int>> symbols);

  // Adds `name` with `rank`. Re-adding with the same rank is a no-op; a
  // different rank throws Error.
  void add(std::string_view name, int rank);

  bool contains(std::string_view name) const;
  std::optional<int> rank(std::string_view name) const;
  // Throws Error when `name` is undeclared.
  int rank_of(std::string_view name) const;

  bool is_constant(std::string_view name) const;

  // Sorted by name.
  std::vector<std::string> constants() const;
  std::vector<std::string> functions() const;
  const std::map<std::string, int, std::less<>>& symbols() const {
    return ranks_;
  }

  int max_rank() const;
  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }

  // "a:0 b:0 f:1" in name order.
  std::string to_string() const;

  // Parses the whitespace separated `name:rank` list used in expression files.
  static RankedAlphabet parse(std::string_view text);

  friend bool operator==(const RankedAlphabet&, const RankedAlphabet&) = default;

 private:
  std::map<std::string, int, std::less<>> ranks_;
};

// True if `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_symbol_name(std::string_view name);

}  // namespace treepos

#endif  // TREEPOS_ALPHABET_HPP_
