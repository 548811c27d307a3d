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

#include "treepos/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace treepos {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : Error(message + " (at offset " + std::to_string(offset) + ")"),
      message_(message),
      offset_(offset) {}

namespace {

// Recursive-descent reader shared by the expression and tree grammars.
class Reader {
 public:
  Reader(std::string_view text, const RankedAlphabet* alphabet)
      : text_(text), alphabet_(alphabet) {}

  TreeExpr parse_whole_expression() {
    TreeExpr e = parse_sum();
    expect_end();
    return e;
  }

  GroundTree parse_whole_tree() {
    GroundTree t = parse_tree();
    expect_end();
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  void expect(char ch) {
    if (!consume(ch)) fail(std::string("expected '") + ch + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    std::string found =
        pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'"
                            : std::string("end of input");
    throw ParseError("syntax error: " + what + ", found " + found, pos_);
  }

  bool name_start() {
    char ch = peek();
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }

  std::string read_name() {
    if (!name_start()) fail("expected a symbol name");
    std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::string read_constant(const char* role) {
    std::size_t at = (skip_space(), pos_);
    std::string name = read_name();
    if (alphabet_ != nullptr) {
      auto rank = alphabet_->rank(name);
      if (!rank) throw ParseError("undeclared symbol '" + name + "'", at);
      if (*rank != 0) {
        throw ParseError(std::string(role) + " annotation '" + name +
                             "' is not a constant (rank " +
                             std::to_string(*rank) + ")",
                         at);
      }
    }
    return name;
  }

  void check_arity(const std::string& name, std::size_t arity,
                   std::size_t at) {
    if (alphabet_ == nullptr) return;
    auto rank = alphabet_->rank(name);
    if (!rank) throw ParseError("undeclared symbol '" + name + "'", at);
    if (static_cast<std::size_t>(*rank) != arity) {
      throw ParseError("arity mismatch: '" + name + "' has rank " +
                           std::to_string(*rank) + " but is given " +
                           std::to_string(arity) + " argument(s)",
                       at);
    }
  }

  TreeExpr parse_sum() {
    TreeExpr e = parse_product();
    while (consume('+')) e = TreeExpr::sum(e, parse_product());
    return e;
  }

  TreeExpr parse_product() {
    TreeExpr e = parse_star();
    while (consume('.')) {
      std::string c = read_constant("product");
      e = TreeExpr::product(e, c, parse_star());
    }
    return e;
  }

  TreeExpr parse_star() {
    TreeExpr e = parse_atom();
    while (consume('*')) e = TreeExpr::star(e, read_constant("star"));
    return e;
  }

  TreeExpr parse_atom() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      TreeExpr e = parse_sum();
      expect(')');
      return e;
    }
    if (ch == '0') {
      ++pos_;
      return TreeExpr::empty();
    }
    std::size_t at = pos_;
    std::string name = read_name();
    if (!consume('(')) {
      check_arity(name, 0, at);
      return TreeExpr::constant(name);
    }
    std::vector<TreeExpr> children;
    do {
      children.push_back(parse_sum());
    } while (consume(','));
    expect(')');
    check_arity(name, children.size(), at);
    return TreeExpr::apply(name, std::move(children));
  }

  GroundTree parse_tree() {
    std::size_t at = (skip_space(), pos_);
    std::string name = read_name();
    GroundTree t(name);
    if (consume('(')) {
      do {
        t.children.push_back(parse_tree());
      } while (consume(','));
      expect(')');
    }
    check_arity(name, t.children.size(), at);
    return t;
  }

  std::string_view text_;
  const RankedAlphabet* alphabet_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

TreeExpr parse_expression(std::string_view text,
                          const RankedAlphabet& alphabet) {
  return Reader(text, &alphabet).parse_whole_expression();
}

TreeExpr parse_expression(std::string_view text) {
  TreeExpr e = Reader(text, nullptr).parse_whole_expression();
  infer_alphabet(e);
  return e;
}

ExpressionFile parse_expression_file(std::string_view text) {
  std::optional<std::string> alphabet_text;
  std::optional<std::pair<std::string, std::size_t>> expr_text;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line =
        trim(text.substr(line_start, line_end - line_start));
    if (!line.empty() && line.front() != '#') {
      auto colon = line.find(':');
      std::string_view key =
          colon == std::string_view::npos ? "" : trim(line.substr(0, colon));
      std::string_view value =
          colon == std::string_view::npos ? "" : line.substr(colon + 1);
      if (key == "alphabet" && !alphabet_text) {
        alphabet_text = std::string(value);
      } else if (key == "expr" && !expr_text) {
        std::size_t value_offset =
            static_cast<std::size_t>(value.data() - text.data());
        expr_text = {std::string(value), value_offset};
      } else {
        throw ParseError("expected 'alphabet:' or 'expr:' line", line_start);
      }
    }
    line_start = line_end + 1;
  }
  if (!expr_text) throw ParseError("missing 'expr:' line", text.size());

  ExpressionFile file;
  try {
    if (alphabet_text) {
      file.alphabet = RankedAlphabet::parse(*alphabet_text);
      file.expr = parse_expression(expr_text->first, file.alphabet);
    } else {
      file.expr = parse_expression(expr_text->first);
      file.alphabet = infer_alphabet(file.expr);
    }
  } catch (const ParseError& e) {
    // Re-anchor the offset to the whole file.
    throw ParseError(e.message(), expr_text->second + e.offset());
  }
  return file;
}

ExpressionFile read_expression_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_expression_file(buffer.str());
}

GroundTree parse_tree(std::string_view text, const RankedAlphabet& alphabet) {
  return Reader(text, &alphabet).parse_whole_tree();
}

}  // namespace treepos
