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

#include "treepos/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace treepos {

RankedAlphabet::RankedAlphabet(
    std::initializer_list<std::pair<std::string, int>> symbols) {
  for (const auto& [name, rank] : symbols) add(name, rank);
}

void RankedAlphabet::add(std::string_view name, int rank) {
  if (!is_valid_symbol_name(name)) {
    throw Error("invalid symbol name '" + std::string(name) + "'");
  }
  if (rank < 0) {
    throw Error("negative rank for symbol '" + std::string(name) + "'");
  }
  auto it = ranks_.find(name);
  if (it != ranks_.end()) {
    if (it->second != rank) {
      throw Error("symbol '" + std::string(name) + "' declared with ranks " +
                  std::to_string(it->second) + " and " + std::to_string(rank));
    }
    return;
  }
  ranks_.emplace(std::string(name), rank);
}

bool RankedAlphabet::contains(std::string_view name) const {
  return ranks_.find(name) != ranks_.end();
}

std::optional<int> RankedAlphabet::rank(std::string_view name) const {
  auto it = ranks_.find(name);
  if (it == ranks_.end()) return std::nullopt;
  return it->second;
}

int RankedAlphabet::rank_of(std::string_view name) const {
  auto r = rank(name);
  if (!r) throw Error("undeclared symbol '" + std::string(name) + "'");
  return *r;
}

bool RankedAlphabet::is_constant(std::string_view name) const {
  auto r = rank(name);
  return r && *r == 0;
}

std::vector<std::string> RankedAlphabet::constants() const {
  std::vector<std::string> out;
  for (const auto& [name, rank] : ranks_) {
    if (rank == 0) out.push_back(name);
  }
  return out;
}

std::vector<std::string> RankedAlphabet::functions() const {
  std::vector<std::string> out;
  for (const auto& [name, rank] : ranks_) {
    if (rank > 0) out.push_back(name);
  }
  return out;
}

int RankedAlphabet::max_rank() const {
  int r = 0;
  for (const auto& entry : ranks_) r = std::max(r, entry.second);
  return r;
}

std::string RankedAlphabet::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, rank] : ranks_) {
    if (!first) out << ' ';
    first = false;
    out << name << ':' << rank;
  }
  return out.str();
}

RankedAlphabet RankedAlphabet::parse(std::string_view text) {
  RankedAlphabet alphabet;
  std::istringstream in{std::string(text)};
  std::string item;
  while (in >> item) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error("alphabet entry '" + item + "' is not of the form name:rank");
    }
    std::string_view digits = std::string_view(item).substr(colon + 1);
    int rank = -1;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      throw Error("alphabet entry '" + item + "' has a malformed rank");
    }
    alphabet.add(item.substr(0, colon), rank);
  }
  return alphabet;
}

bool is_valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace treepos
