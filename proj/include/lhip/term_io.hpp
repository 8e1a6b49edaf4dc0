// Copyright 2026 The LHIP Toolkit Authors
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

#ifndef LHIP_TERM_IO_HPP_
#define LHIP_TERM_IO_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lhip/term.hpp"

namespace lhip {

/// Token over the shared surface syntax used by term text, grammar files
/// and theory files. '%' starts a line comment.
struct Token {
  enum class Kind { Atom, QAtom, Var, Number, Punct, End, Error };
  Kind kind = Kind::End;
  std::string text;  // atom/var name, punct spelling, or error message
  Rational num;
  int line = 1;
  int col = 1;
};

/// Hand-rolled lexer. Multi-character operators recognized: "~~>", ":-",
/// "=<", ">=". A '.' is a clause terminator unless it sits between digits.
class Lexer {
 public:
  explicit Lexer(std::string_view src);

  const Token& peek(size_t ahead = 0);
  Token next();
  bool at_end();

 private:
  Token lex();
  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::vector<Token> buffer_;
};

/// Parses terms in canonical syntax: functor(args), 'quoted atoms',
/// Variables, numbers, [lists|T]. Variable names are scoped: within one
/// scope the same name maps to the same variable; '_' is always fresh.
class TermParser {
 public:
  TermParser(Lexer* lex, VarGen* gen) : lex_(lex), gen_(gen) {}

  std::optional<Term> parse(std::string* error);
  /// Starts a new variable scope (call between clauses/rules).
  void new_scope() { names_.clear(); }
  const std::map<std::string, VarId>& var_names() const { return names_; }

 private:
  Lexer* lex_;
  VarGen* gen_;
  std::map<std::string, VarId> names_;
};

/// Parses a complete string as a single term. Returns nullopt and sets
/// *error on any syntax error or trailing input.
std::optional<Term> parse_term(std::string_view text,
                               std::string* error = nullptr);

/// Canonical text form. Variables print as _G<id>. Atoms that do not match
/// [a-z][A-Za-z0-9_]* are quoted, so accented and capitalized words
/// round-trip ('téléphone', 'Plant'). Rationals print as exact decimals
/// when the denominator is a power of ten (the only numbers the toolkit
/// writes into term text).
std::string to_string(const Term& t);

/// Like to_string but with variables renamed _V1, _V2, ... in order of
/// first occurrence; equal up to renaming iff canonical strings are equal.
std::string canonical(const Term& t);

}  // namespace lhip

#endif  // LHIP_TERM_IO_HPP_
