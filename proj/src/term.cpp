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

#include "lhip/term.hpp"

#include <stdexcept>

namespace lhip {

struct Term::Node {
  Kind kind = Kind::Atom;
  Symbol sym;
  Rational num;
  VarId var = 0;
  std::vector<Term> args;
  std::optional<Term> tail;
};

namespace {
const std::vector<Term>& empty_args() {
  static const std::vector<Term> e;
  return e;
}
const std::optional<Term>& no_tail() {
  static const std::optional<Term> t;
  return t;
}
}  // namespace

Term::Term() : node_(nullptr) {}

Term Term::atom(Symbol name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->sym = name;
  return Term(std::move(n));
}

Term Term::atom(std::string_view name) { return atom(Symbol(name)); }

Term Term::number(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->num = value;
  return Term(std::move(n));
}

Term Term::var(VarId id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = id;
  return Term(std::move(n));
}

Term Term::compound(Symbol functor, std::vector<Term> args) {
  if (args.empty()) return atom(functor);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compound;
  n->sym = functor;
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::compound(std::string_view functor, std::vector<Term> args) {
  return compound(Symbol(functor), std::move(args));
}

Term Term::list(std::vector<Term> elems) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::List;
  n->args = std::move(elems);
  return Term(std::move(n));
}

Term Term::list(std::vector<Term> elems, Term tail) {
  // normalize: a list tail that is itself a list gets spliced
  if (tail.kind() == Kind::List) {
    for (const Term& t : tail.args()) elems.push_back(t);
    if (tail.tail()) return list(std::move(elems), *tail.tail());
    return list(std::move(elems));
  }
  if (elems.empty() && tail.is_var()) {
    // [|T] with no elements is just T
    return tail;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::List;
  n->args = std::move(elems);
  n->tail = std::move(tail);
  return Term(std::move(n));
}

Term::Kind Term::kind() const {
  return node_ ? node_->kind : Kind::Atom;
}

bool Term::is_nil() const {
  return kind() == Kind::List && args().empty() && !tail();
}

Symbol Term::functor() const { return node_ ? node_->sym : Symbol(); }

const std::vector<Term>& Term::args() const {
  return node_ ? node_->args : empty_args();
}

VarId Term::var_id() const { return node_ ? node_->var : 0; }

const Rational& Term::num() const {
  static const Rational zero;
  return node_ ? node_->num : zero;
}

const std::optional<Term>& Term::tail() const {
  return node_ ? node_->tail : no_tail();
}

Pred Term::pred() const {
  switch (kind()) {
    case Kind::Atom:
      return {functor(), 0};
    case Kind::Compound:
      return {functor(), static_cast<uint32_t>(args().size())};
    case Kind::List:
      return is_nil() ? Pred{Symbol("[]"), 0} : Pred{Symbol("."), 2};
    case Kind::Number:
      return {Symbol("<number>"), 0};
    case Kind::Var:
      return {Symbol("<var>"), 0};
  }
  return {Symbol(), 0};
}

bool Term::equals(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Atom:
      return functor() == other.functor();
    case Kind::Number:
      return num() == other.num();
    case Kind::Var:
      return var_id() == other.var_id();
    case Kind::Compound: {
      if (functor() != other.functor()) return false;
      if (args().size() != other.args().size()) return false;
      for (size_t i = 0; i < args().size(); ++i)
        if (!args()[i].equals(other.args()[i])) return false;
      return true;
    }
    case Kind::List: {
      if (args().size() != other.args().size()) return false;
      if (tail().has_value() != other.tail().has_value()) return false;
      for (size_t i = 0; i < args().size(); ++i)
        if (!args()[i].equals(other.args()[i])) return false;
      if (tail() && !tail()->equals(*other.tail())) return false;
      return true;
    }
  }
  return false;
}

bool Term::is_ground() const {
  switch (kind()) {
    case Kind::Atom:
    case Kind::Number:
      return true;
    case Kind::Var:
      return false;
    case Kind::Compound:
    case Kind::List: {
      for (const Term& a : args())
        if (!a.is_ground()) return false;
      if (tail() && !tail()->is_ground()) return false;
      return true;
    }
  }
  return true;
}

void Term::collect_vars(std::vector<VarId>* out) const {
  switch (kind()) {
    case Kind::Var: {
      for (VarId v : *out)
        if (v == var_id()) return;
      out->push_back(var_id());
      return;
    }
    case Kind::Compound:
    case Kind::List: {
      for (const Term& a : args()) a.collect_vars(out);
      if (tail()) tail()->collect_vars(out);
      return;
    }
    default:
      return;
  }
}

const Term* Substitution::lookup(VarId v) const {
  auto it = bindings_.find(v);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Substitution::bind(VarId v, Term t) { bindings_[v] = std::move(t); }

Term Substitution::walk(Term t) const {
  while (t.is_var()) {
    const Term* b = lookup(t.var_id());
    if (!b) return t;
    t = *b;
  }
  return t;
}

Term Substitution::apply(const Term& t) const {
  Term w = walk(t);
  switch (w.kind()) {
    case Term::Kind::Atom:
    case Term::Kind::Number:
    case Term::Kind::Var:
      return w;
    case Term::Kind::Compound: {
      std::vector<Term> out;
      out.reserve(w.args().size());
      for (const Term& a : w.args()) out.push_back(apply(a));
      return Term::compound(w.functor(), std::move(out));
    }
    case Term::Kind::List: {
      std::vector<Term> out;
      out.reserve(w.args().size());
      for (const Term& a : w.args()) out.push_back(apply(a));
      if (w.tail()) return Term::list(std::move(out), apply(*w.tail()));
      return Term::list(std::move(out));
    }
  }
  return w;
}

namespace {

bool occurs(VarId v, const Term& t, const Substitution& s) {
  Term w = s.walk(t);
  switch (w.kind()) {
    case Term::Kind::Var:
      return w.var_id() == v;
    case Term::Kind::Compound:
    case Term::Kind::List: {
      for (const Term& a : w.args())
        if (occurs(v, a, s)) return true;
      if (w.tail() && occurs(v, *w.tail(), s)) return true;
      return false;
    }
    default:
      return false;
  }
}

bool unify_into(const Term& a, const Term& b, Substitution* s);

// Unifies list remainders: elems[from..] with tail `atail` against `b`.
bool unify_list_rest(const std::vector<Term>& elems, size_t from,
                     const std::optional<Term>& atail, const Term& b,
                     Substitution* s) {
  std::vector<Term> rest(elems.begin() + static_cast<long>(from), elems.end());
  Term rest_list = atail ? Term::list(std::move(rest), *atail)
                         : Term::list(std::move(rest));
  return unify_into(rest_list, b, s);
}

bool unify_into(const Term& a0, const Term& b0, Substitution* s) {
  Term a = s->walk(a0);
  Term b = s->walk(b0);
  if (a.is_var() && b.is_var() && a.var_id() == b.var_id()) return true;
  if (a.is_var()) {
    if (occurs(a.var_id(), b, *s)) return false;
    s->bind(a.var_id(), b);
    return true;
  }
  if (b.is_var()) {
    if (occurs(b.var_id(), a, *s)) return false;
    s->bind(b.var_id(), a);
    return true;
  }
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Atom:
      return a.functor() == b.functor();
    case Term::Kind::Number:
      return a.num() == b.num();
    case Term::Kind::Compound: {
      if (a.functor() != b.functor()) return false;
      if (a.args().size() != b.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!unify_into(a.args()[i], b.args()[i], s)) return false;
      return true;
    }
    case Term::Kind::List: {
      size_t n = a.args().size() < b.args().size() ? a.args().size()
                                                   : b.args().size();
      for (size_t i = 0; i < n; ++i)
        if (!unify_into(a.args()[i], b.args()[i], s)) return false;
      if (a.args().size() == b.args().size()) {
        if (!a.tail() && !b.tail()) return true;
        if (a.tail() && b.tail()) return unify_into(*a.tail(), *b.tail(), s);
        // one proper, one open: open tail must be []
        const Term& open = a.tail() ? *a.tail() : *b.tail();
        return unify_into(open, Term::nil(), s);
      }
      if (a.args().size() < b.args().size()) {
        if (!a.tail()) return false;  // proper list too short
        return unify_list_rest(b.args(), n, b.tail(), *a.tail(), s);
      }
      if (!b.tail()) return false;
      return unify_list_rest(a.args(), n, a.tail(), *b.tail(), s);
    }
    default:
      return false;
  }
}

}  // namespace

std::optional<Substitution> unify(const Term& t1, const Term& t2,
                                  Substitution s) {
  if (unify_into(t1, t2, &s)) return s;
  return std::nullopt;
}

namespace {
Term freshen_rec(const Term& t, VarGen* gen, std::map<VarId, VarId>* ren) {
  switch (t.kind()) {
    case Term::Kind::Atom:
    case Term::Kind::Number:
      return t;
    case Term::Kind::Var: {
      auto it = ren->find(t.var_id());
      if (it == ren->end())
        it = ren->emplace(t.var_id(), gen->fresh()).first;
      return Term::var(it->second);
    }
    case Term::Kind::Compound: {
      std::vector<Term> out;
      out.reserve(t.args().size());
      for (const Term& a : t.args()) out.push_back(freshen_rec(a, gen, ren));
      return Term::compound(t.functor(), std::move(out));
    }
    case Term::Kind::List: {
      std::vector<Term> out;
      out.reserve(t.args().size());
      for (const Term& a : t.args()) out.push_back(freshen_rec(a, gen, ren));
      if (t.tail())
        return Term::list(std::move(out), freshen_rec(*t.tail(), gen, ren));
      return Term::list(std::move(out));
    }
  }
  return t;
}
}  // namespace

Term freshen(const Term& t, VarGen* gen) {
  std::map<VarId, VarId> ren;
  return freshen_rec(t, gen, &ren);
}

Term freshen(const Term& t, VarGen* gen, std::map<VarId, VarId>* renaming) {
  return freshen_rec(t, gen, renaming);
}

}  // namespace lhip
