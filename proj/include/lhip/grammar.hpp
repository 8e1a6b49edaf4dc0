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

#ifndef LHIP_GRAMMAR_HPP_
#define LHIP_GRAMMAR_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lhip/term.hpp"
#include "lhip/term_io.hpp"

namespace lhip {

/// Positioned message from a parser or validator.
struct Diagnostic {
  enum class Severity { Error, Warning, Note };
  Severity severity = Severity::Error;
  int line = 0;
  int col = 0;
  std::string message;

  std::string str() const;
};

/// The closed set of embedded-code constraints a rule body may run.
/// Grammars stay declarative: everything else must be a rule.
struct BuiltinConstraint {
  enum class Kind {
    Unify,            // {X = cat}
    Append,           // {append(Intro,X,L)}
    MinList,          // {minlist([C1,C2],W)} - ground numeric list
    Member,           // {member(X,W)} - case-insensitive on atoms
    NotMember,        // {notmember(X,W)} - complement of member
    ThesaurusLookup,  // {thesaurus(street,W)} - binds W to the word list
    Compare,          // {A < B} etc. over ground numbers
  };
  enum class CmpOp { Lt, Le, Ge, Gt };

  Kind kind = Kind::Unify;
  CmpOp op = CmpOp::Lt;
  std::vector<Term> args;
};

struct RhsExpr;
using RhsPtr = std::shared_ptr<const RhsExpr>;

/// Right-hand-side expression of an LHIP rule.
struct RhsExpr {
  enum class Kind {
    Seq,            // a, b, c
    Adjacent,       // a : b        (right island starts at left island end)
    Disjunction,    // a ; b
    Negation,       // ~ a          (no island of a in the permitted region)
    Optional,       // (? a ?)
    Head,           // * a          (evaluated first, anchors the island)
    TerminalMatch,  // @word or @terminal(W,P)
    Call,           // nonterminal(Args)
    IgnoreCall,     // ignore / ignore(name)
    Builtin,        // {constraint}
  };

  Kind kind;
  std::vector<RhsPtr> kids;             // Seq items, binary pairs, unary inner
  Term word_pat, payload_pat;           // TerminalMatch
  Term goal;                            // Call
  std::optional<Symbol> ignore_name;    // IgnoreCall; nullopt = whole class
  std::optional<BuiltinConstraint> builtin;

  static RhsPtr seq(std::vector<RhsPtr> items);
  static RhsPtr adjacent(RhsPtr l, RhsPtr r);
  static RhsPtr disjunction(RhsPtr l, RhsPtr r);
  static RhsPtr negation(RhsPtr inner);
  static RhsPtr optional(RhsPtr inner);
  static RhsPtr head(RhsPtr inner);
  static RhsPtr terminal(Term word, Term payload);
  static RhsPtr call(Term goal);
  static RhsPtr ignore_call(std::optional<Symbol> name);
  static RhsPtr builtin_call(BuiltinConstraint c);
};

struct Rule {
  enum class Kind { Normal, Ignore };

  Term lhs;
  std::optional<Rational> threshold;  // the "#T" annotation
  RhsPtr body;
  Kind kind = Kind::Normal;
  int index = 0;  // source order
  int line = 0, col = 0;

  Pred pred() const { return lhs.pred(); }
};

struct Grammar {
  std::vector<Rule> rules;
  std::set<Pred> start_symbols;  // defaults to the first rule's predicate
  Rational default_threshold{0};
  /// One past the largest variable id used by any rule; seed parse-run
  /// generators here.
  VarId var_watermark = 1;

  std::vector<int> rules_for(const Pred& p) const;
  /// Ignore rules, optionally restricted to one name.
  std::vector<int> ignore_rules(std::optional<Symbol> name) const;
  bool defines(const Pred& p) const;
};

struct GrammarParseResult {
  std::optional<Grammar> grammar;  // empty on any error diagnostic
  std::vector<Diagnostic> diagnostics;
};

/// Parses LHIP grammar text. Errors produce diagnostics and no grammar —
/// never a partial grammar.
GrammarParseResult parse_grammar(std::string_view text);

/// Canonical source form; parse_grammar(pretty_print(g)) reproduces g and
/// printing again reproduces the same string.
std::string pretty_print(const Grammar& g);

/// Style and reachability checks: undefined nonterminals, multiple heads in
/// one sequence, heads scoped inside negation/disjunction, unreachable
/// rules. Never errors; diagnostics only.
std::vector<Diagnostic> validate(const Grammar& g);

}  // namespace lhip

#endif  // LHIP_GRAMMAR_HPP_
