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

#ifndef TREEPOS_PARSER_HPP_
#define TREEPOS_PARSER_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "treepos/alphabet.hpp"
#include "treepos/expr.hpp"
#include "treepos/ground_tree.hpp"

namespace treepos {

// Raised for malformed input; `offset` is the 0-based byte offset in the text
// that was being parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }
  // The message without the offset suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// Grammar (whitespace is insignificant outside names):
//   expr    := product ('+' product)*
//   product := star ('.' constant star)*
//   star    := atom ('*' constant)*
//   atom    := symbol | symbol '(' expr (',' expr)* ')' | '0' | '(' expr ')'
// Every symbol must be declared in `alphabet` with a matching arity.
TreeExpr parse_expression(std::string_view text,
                          const RankedAlphabet& alphabet);

// Same grammar, with ranks inferred from usage.
TreeExpr parse_expression(std::string_view text);

struct ExpressionFile {
  RankedAlphabet alphabet;
  TreeExpr expr = TreeExpr::empty();
};

// Reads the two-line format
//   alphabet: a:0 b:0 f:1
//   expr: f(a) *a .a b
// Blank lines and lines starting with '#' are skipped. When the alphabet line
// is absent, ranks are inferred from the expression.
ExpressionFile parse_expression_file(std::string_view text);
ExpressionFile read_expression_file(const std::string& path);

// Parses a ground tree literal such as g(b,a). Symbols must be declared with
// matching arity.
GroundTree parse_tree(std::string_view text, const RankedAlphabet& alphabet);

}  // namespace treepos

#endif  // TREEPOS_PARSER_HPP_
