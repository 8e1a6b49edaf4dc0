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

#ifndef LHIP_TERM_HPP_
#define LHIP_TERM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lhip/rational.hpp"
#include "lhip/symbol.hpp"

namespace lhip {

using VarId = uint64_t;

/// Functor/arity pair identifying a predicate or constructor.
struct Pred {
  Symbol name;
  uint32_t arity = 0;

  friend bool operator==(const Pred& a, const Pred& b) {
    return a.name == b.name && a.arity == b.arity;
  }
  friend bool operator!=(const Pred& a, const Pred& b) { return !(a == b); }
  friend bool operator<(const Pred& a, const Pred& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.arity < b.arity;
  }
  std::string str() const {
    return name.str() + "/" + std::to_string(arity);
  }
};

/// Immutable first-order term. Handles share structure; copying a Term is a
/// pointer copy, so terms are cheap values and safe to pass across threads.
///
/// Variants: atom, number (exact rational), variable, compound, list. An
/// arity-0 compound is always represented as an atom. Lists distinguish
/// proper lists from partial ones ([H|T] with an open tail).
class Term {
 public:
  enum class Kind : uint8_t { Atom, Number, Var, Compound, List };

  Term();  // the atom ''

  static Term atom(Symbol name);
  static Term atom(std::string_view name);
  static Term number(Rational value);
  static Term var(VarId id);
  static Term compound(Symbol functor, std::vector<Term> args);
  static Term compound(std::string_view functor, std::vector<Term> args);
  static Term list(std::vector<Term> elems);
  static Term list(std::vector<Term> elems, Term tail);
  static Term nil() { return list({}); }

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_number() const { return kind() == Kind::Number; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_compound() const { return kind() == Kind::Compound; }
  bool is_list() const { return kind() == Kind::List; }
  bool is_nil() const;

  Symbol functor() const;                 // atom name or compound functor
  const std::vector<Term>& args() const;  // compound args or list elements
  VarId var_id() const;
  const Rational& num() const;
  /// Open tail of a partial list; nullopt for proper lists.
  const std::optional<Term>& tail() const;

  /// Functor/arity; atoms are name/0, lists report './2' or '[]/0'.
  Pred pred() const;

  /// Structural equality (variables compare by id).
  bool equals(const Term& other) const;
  /// True if no variables occur anywhere in the term.
  bool is_ground() const;
  /// Collects variable ids in first-occurrence order (depth-first).
  void collect_vars(std::vector<VarId>* out) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Finite map from variable id to term. Substitutions are values: binding
/// returns through copies, never mutates shared state.
class Substitution {
 public:
  bool empty() const { return bindings_.empty(); }
  size_t size() const { return bindings_.size(); }
  const Term* lookup(VarId v) const;
  void bind(VarId v, Term t);

  /// Dereferences a variable chain one level at a time until the result is
  /// a non-variable or an unbound variable.
  Term walk(Term t) const;
  /// Replaces every bound variable recursively, to a fixed point.
  Term apply(const Term& t) const;

  const std::map<VarId, Term>& bindings() const { return bindings_; }

 private:
  std::map<VarId, Term> bindings_;
};

/// Most general unifier of t1 and t2 extending s, or nullopt. Runs the
/// occurs check, so failure (not a loop) comes back for X = f(X).
std::optional<Substitution> unify(const Term& t1, const Term& t2,
                                  Substitution s);

/// Fresh-variable source. One generator per parse or proof run; never
/// shared between runs, so derivations stay reproducible. Seed it past the
/// watermark of any pre-built terms (grammar rules, theory clauses) so the
/// run never reuses their ids.
class VarGen {
 public:
  VarGen() = default;
  explicit VarGen(VarId start) : next_(start < 1 ? 1 : start) {}
  VarId fresh() { return next_++; }
  VarId watermark() const { return next_; }

 private:
  VarId next_ = 1;
};

/// Renames every variable in t to a fresh one, consistently within the
/// call. The map form shares the renaming across several terms (a rule's
/// head and body must be freshened together).
Term freshen(const Term& t, VarGen* gen);
Term freshen(const Term& t, VarGen* gen, std::map<VarId, VarId>* renaming);

}  // namespace lhip

#endif  // LHIP_TERM_HPP_
