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

#include "lhip/grammar.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace lhip {

std::string Diagnostic::str() const {
  const char* sev = severity == Severity::Error     ? "error"
                    : severity == Severity::Warning ? "warning"
                                                    : "note";
  std::ostringstream os;
  os << sev << " at " << line << ":" << col << ": " << message;
  return os.str();
}

RhsPtr RhsExpr::seq(std::vector<RhsPtr> items) {
  if (items.size() == 1) return items[0];
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Seq;
  e->kids = std::move(items);
  return e;
}
RhsPtr RhsExpr::adjacent(RhsPtr l, RhsPtr r) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Adjacent;
  e->kids = {std::move(l), std::move(r)};
  return e;
}
RhsPtr RhsExpr::disjunction(RhsPtr l, RhsPtr r) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Disjunction;
  e->kids = {std::move(l), std::move(r)};
  return e;
}
RhsPtr RhsExpr::negation(RhsPtr inner) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Negation;
  e->kids = {std::move(inner)};
  return e;
}
RhsPtr RhsExpr::optional(RhsPtr inner) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Optional;
  e->kids = {std::move(inner)};
  return e;
}
RhsPtr RhsExpr::head(RhsPtr inner) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Head;
  e->kids = {std::move(inner)};
  return e;
}
RhsPtr RhsExpr::terminal(Term word, Term payload) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::TerminalMatch;
  e->word_pat = std::move(word);
  e->payload_pat = std::move(payload);
  return e;
}
RhsPtr RhsExpr::call(Term goal) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Call;
  e->goal = std::move(goal);
  return e;
}
RhsPtr RhsExpr::ignore_call(std::optional<Symbol> name) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::IgnoreCall;
  e->ignore_name = name;
  return e;
}
RhsPtr RhsExpr::builtin_call(BuiltinConstraint c) {
  auto e = std::make_shared<RhsExpr>();
  e->kind = Kind::Builtin;
  e->builtin = std::move(c);
  return e;
}

std::vector<int> Grammar::rules_for(const Pred& p) const {
  std::vector<int> out;
  for (const Rule& r : rules)
    if (r.kind == Rule::Kind::Normal && r.pred() == p) out.push_back(r.index);
  return out;
}

std::vector<int> Grammar::ignore_rules(std::optional<Symbol> name) const {
  std::vector<int> out;
  for (const Rule& r : rules) {
    if (r.kind != Rule::Kind::Ignore) continue;
    if (name && r.pred().name != *name) continue;
    out.push_back(r.index);
  }
  return out;
}

bool Grammar::defines(const Pred& p) const {
  for (const Rule& r : rules)
    if (r.kind == Rule::Kind::Normal && r.pred() == p) return true;
  return false;
}

namespace {

class GrammarReader {
 public:
  explicit GrammarReader(std::string_view text)
      : lex_(text), terms_(&lex_, &gen_) {}

  GrammarParseResult run() {
    Grammar g;
    while (true) {
      const Token& tk = lex_.peek();
      if (tk.kind == Token::Kind::End) break;
      if (tk.kind == Token::Kind::Error) {
        error(tk.line, tk.col, tk.text);
        break;
      }
      if (!read_rule(&g)) break;
    }
    GrammarParseResult out;
    out.diagnostics = std::move(diags_);
    for (const Diagnostic& d : out.diagnostics)
      if (d.severity == Diagnostic::Severity::Error) return out;
    if (!g.rules.empty())
      g.start_symbols.insert(g.rules.front().pred());
    g.var_watermark = gen_.watermark();
    out.grammar = std::move(g);
    return out;
  }

 private:
  void error(int line, int col, const std::string& msg) {
    diags_.push_back({Diagnostic::Severity::Error, line, col, msg});
  }

  bool punct(const char* p, size_t ahead = 0) {
    const Token& tk = lex_.peek(ahead);
    return tk.kind == Token::Kind::Punct && tk.text == p;
  }

  bool expect_punct(const char* p, const char* what) {
    if (punct(p)) {
      lex_.next();
      return true;
    }
    const Token& tk = lex_.peek();
    error(tk.line, tk.col,
          std::string("expected '") + p + "' " + what + ", found '" +
              tk.text + "'");
    return false;
  }

  bool read_rule(Grammar* g) {
    terms_.new_scope();
    Token first = lex_.peek();
    Rule rule;
    rule.line = first.line;
    rule.col = first.col;
    rule.index = static_cast<int>(g->rules.size());

    // 'ignore' keyword introduces an ignore rule when followed by the
    // rule's own name.
    if (first.kind == Token::Kind::Atom && first.text == "ignore" &&
        (lex_.peek(1).kind == Token::Kind::Atom ||
         lex_.peek(1).kind == Token::Kind::QAtom)) {
      lex_.next();
      rule.kind = Rule::Kind::Ignore;
    }

    std::string err;
    auto lhs = terms_.parse(&err);
    if (!lhs) {
      error(lex_.peek().line, lex_.peek().col, "bad rule head: " + err);
      return false;
    }
    if (!lhs->is_atom() && !lhs->is_compound()) {
      error(rule.line, rule.col, "rule head must be an atom or compound");
      return false;
    }
    rule.lhs = *lhs;

    if (punct("#")) {
      Token hash = lex_.next();
      const Token& num = lex_.peek();
      if (num.kind != Token::Kind::Number) {
        error(hash.line, hash.col, "expected a threshold number after '#'");
        return false;
      }
      lex_.next();
      if (num.num < Rational(0) || num.num > Rational(1)) {
        error(num.line, num.col,
              "threshold " + num.num.str() + " outside [0,1]");
        return false;
      }
      rule.threshold = num.num;
    }

    if (!expect_punct("~~>", "after the rule head")) return false;

    RhsPtr body = read_disjunction();
    if (!body) return false;
    rule.body = body;

    if (!expect_punct(".", "to end the rule")) return false;
    g->rules.push_back(std::move(rule));
    return true;
  }

  RhsPtr read_disjunction() {
    RhsPtr left = read_sequence();
    if (!left) return nullptr;
    while (punct(";")) {
      lex_.next();
      RhsPtr right = read_sequence();
      if (!right) return nullptr;
      left = RhsExpr::disjunction(left, right);
    }
    return left;
  }

  RhsPtr read_sequence() {
    std::vector<RhsPtr> items;
    while (true) {
      RhsPtr item = read_adjacency();
      if (!item) return nullptr;
      items.push_back(item);
      if (punct(",")) {
        lex_.next();
        continue;
      }
      break;
    }
    return RhsExpr::seq(std::move(items));
  }

  RhsPtr read_adjacency() {
    RhsPtr left = read_unary();
    if (!left) return nullptr;
    if (punct(":")) {
      lex_.next();
      RhsPtr right = read_adjacency();  // right-associative chain
      if (!right) return nullptr;
      return RhsExpr::adjacent(left, right);
    }
    return left;
  }

  RhsPtr read_unary() {
    const Token& tk = lex_.peek();
    if (tk.kind == Token::Kind::Error) {
      error(tk.line, tk.col, tk.text);
      return nullptr;
    }
    if (punct("*")) {
      lex_.next();
      RhsPtr inner = read_unary();
      return inner ? RhsExpr::head(inner) : nullptr;
    }
    if (punct("~")) {
      lex_.next();
      RhsPtr inner = read_unary();
      return inner ? RhsExpr::negation(inner) : nullptr;
    }
    if (punct("(")) {
      lex_.next();
      if (punct("?")) {  // (? ... ?) optional form
        lex_.next();
        RhsPtr inner = read_disjunction();
        if (!inner) return nullptr;
        if (!expect_punct("?", "to close the optional item")) return nullptr;
        if (!expect_punct(")", "to close the optional item")) return nullptr;
        return RhsExpr::optional(inner);
      }
      RhsPtr inner = read_disjunction();
      if (!inner) return nullptr;
      if (!expect_punct(")", "to close the group")) return nullptr;
      return inner;
    }
    if (punct("@")) {
      Token at = lex_.next();
      std::string err;
      auto word = terms_.parse(&err);
      if (!word) {
        error(at.line, at.col, "bad terminal pattern: " + err);
        return nullptr;
      }
      if (word->is_compound() && word->functor() == Symbol("terminal") &&
          word->args().size() == 2) {
        return RhsExpr::terminal(word->args()[0], word->args()[1]);
      }
      return RhsExpr::terminal(*word, Term::var(gen_.fresh()));
    }
    if (punct("{")) {
      lex_.next();
      std::vector<RhsPtr> items;
      while (true) {
        RhsPtr c = read_constraint();
        if (!c) return nullptr;
        items.push_back(c);
        if (punct(",")) {
          lex_.next();
          continue;
        }
        break;
      }
      if (!expect_punct("}", "to close the embedded constraints"))
        return nullptr;
      return RhsExpr::seq(std::move(items));
    }
    if (tk.kind == Token::Kind::Atom && tk.text == "ignore" &&
        !punct("(", 1)) {
      lex_.next();
      return RhsExpr::ignore_call(std::nullopt);
    }
    if (tk.kind == Token::Kind::Atom && tk.text == "ignore" && punct("(", 1)) {
      // ignore(name): a class invocation restricted to one rule name
      Token kw = lex_.next();
      lex_.next();  // '('
      const Token& nm = lex_.peek();
      if (nm.kind != Token::Kind::Atom && nm.kind != Token::Kind::QAtom) {
        error(kw.line, kw.col, "expected an ignore-rule name");
        return nullptr;
      }
      Symbol name(lex_.next().text);
      if (!expect_punct(")", "after the ignore-rule name")) return nullptr;
      return RhsExpr::ignore_call(name);
    }
    if (tk.kind == Token::Kind::Atom || tk.kind == Token::Kind::QAtom) {
      std::string err;
      auto goal = terms_.parse(&err);
      if (!goal) {
        error(tk.line, tk.col, "bad rule call: " + err);
        return nullptr;
      }
      return RhsExpr::call(*goal);
    }
    error(tk.line, tk.col, "unexpected token '" + tk.text + "' in rule body");
    return nullptr;
  }

  RhsPtr read_constraint() {
    const Token& start = lex_.peek();
    std::string err;
    auto left = terms_.parse(&err);
    if (!left) {
      error(start.line, start.col, "bad constraint: " + err);
      return nullptr;
    }
    // infix operators
    for (auto [op, kind, cmp] :
         {std::tuple{"=", BuiltinConstraint::Kind::Unify,
                     BuiltinConstraint::CmpOp::Lt},
          std::tuple{"<", BuiltinConstraint::Kind::Compare,
                     BuiltinConstraint::CmpOp::Lt},
          std::tuple{"=<", BuiltinConstraint::Kind::Compare,
                     BuiltinConstraint::CmpOp::Le},
          std::tuple{">=", BuiltinConstraint::Kind::Compare,
                     BuiltinConstraint::CmpOp::Ge},
          std::tuple{">", BuiltinConstraint::Kind::Compare,
                     BuiltinConstraint::CmpOp::Gt}}) {
      if (punct(op)) {
        lex_.next();
        auto right = terms_.parse(&err);
        if (!right) {
          error(start.line, start.col, "bad constraint: " + err);
          return nullptr;
        }
        BuiltinConstraint c;
        c.kind = kind;
        c.op = cmp;
        c.args = {*left, *right};
        return RhsExpr::builtin_call(std::move(c));
      }
    }
    // functor forms
    BuiltinConstraint c;
    Pred p = left->pred();
    if (p == Pred{Symbol("append"), 3}) {
      c.kind = BuiltinConstraint::Kind::Append;
    } else if (p == Pred{Symbol("minlist"), 2}) {
      c.kind = BuiltinConstraint::Kind::MinList;
    } else if (p == Pred{Symbol("member"), 2}) {
      c.kind = BuiltinConstraint::Kind::Member;
    } else if (p == Pred{Symbol("notmember"), 2}) {
      c.kind = BuiltinConstraint::Kind::NotMember;
    } else if (p == Pred{Symbol("thesaurus"), 2}) {
      if (!left->args()[0].is_atom()) {
        error(start.line, start.col, "thesaurus category must be an atom");
        return nullptr;
      }
      c.kind = BuiltinConstraint::Kind::ThesaurusLookup;
    } else {
      error(start.line, start.col,
            "unknown builtin '" + p.str() +
                "' (allowed: =, <, =<, >=, >, append/3, minlist/2, "
                "member/2, notmember/2, thesaurus/2)");
      return nullptr;
    }
    c.args = left->args();
    return RhsExpr::builtin_call(std::move(c));
  }

  Lexer lex_;
  VarGen gen_;
  TermParser terms_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

GrammarParseResult parse_grammar(std::string_view text) {
  return GrammarReader(text).run();
}

// ---------------------------------------------------------------------------
// pretty printer

namespace {

// Variables print as '_' when they occur once in the whole rule, else as
// V1, V2, ... by first occurrence. Reparsing reproduces the same structure.
struct VarNames {
  std::map<VarId, int> counts;
  std::map<VarId, std::string> names;
  int next = 0;

  void count(const Term& t) {
    if (t.is_var()) {
      counts[t.var_id()]++;
      return;
    }
    for (const Term& a : t.args()) count(a);
    if (t.tail()) count(*t.tail());
  }

  std::string name(VarId v) {
    if (counts[v] <= 1) return "_";
    auto it = names.find(v);
    if (it == names.end())
      it = names.emplace(v, "V" + std::to_string(++next)).first;
    return it->second;
  }
};

void print_term_named(std::ostringstream& os, const Term& t, VarNames* vars) {
  switch (t.kind()) {
    case Term::Kind::Var:
      os << vars->name(t.var_id());
      return;
    case Term::Kind::Compound: {
      std::ostringstream head;
      print_term_named(head, Term::atom(t.functor()), vars);
      os << head.str() << '(';
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ',';
        print_term_named(os, t.args()[i], vars);
      }
      os << ')';
      return;
    }
    case Term::Kind::List: {
      os << '[';
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ',';
        print_term_named(os, t.args()[i], vars);
      }
      if (t.tail()) {
        os << '|';
        print_term_named(os, *t.tail(), vars);
      }
      os << ']';
      return;
    }
    default:
      os << to_string(t);
      return;
  }
}

std::string term_named(const Term& t, VarNames* vars) {
  std::ostringstream os;
  print_term_named(os, t, vars);
  return os.str();
}

// precedence levels: disjunction < sequence < adjacency < unary
enum Level { kDisj = 0, kSeq = 1, kAdj = 2, kUnary = 3 };

void print_rhs(std::ostringstream& os, const RhsExpr& e, int level,
               VarNames* vars) {
  auto wrap = [&](int mine, auto&& body) {
    if (mine < level) {
      os << '(';
      body();
      os << ')';
    } else {
      body();
    }
  };
  switch (e.kind) {
    case RhsExpr::Kind::Seq:
      wrap(kSeq, [&] {
        for (size_t i = 0; i < e.kids.size(); ++i) {
          if (i) os << ", ";
          print_rhs(os, *e.kids[i], kSeq + 1, vars);
        }
      });
      return;
    case RhsExpr::Kind::Disjunction:
      wrap(kDisj, [&] {
        print_rhs(os, *e.kids[0], kDisj + 1, vars);
        os << "; ";
        print_rhs(os, *e.kids[1], kDisj, vars);
      });
      return;
    case RhsExpr::Kind::Adjacent:
      wrap(kAdj, [&] {
        print_rhs(os, *e.kids[0], kAdj + 1, vars);
        os << " : ";
        print_rhs(os, *e.kids[1], kAdj, vars);
      });
      return;
    case RhsExpr::Kind::Negation:
      os << "~ ";
      print_rhs(os, *e.kids[0], kUnary, vars);
      return;
    case RhsExpr::Kind::Optional:
      os << "(? ";
      print_rhs(os, *e.kids[0], kDisj, vars);
      os << " ?)";
      return;
    case RhsExpr::Kind::Head:
      os << "* ";
      print_rhs(os, *e.kids[0], kUnary, vars);
      return;
    case RhsExpr::Kind::TerminalMatch: {
      bool payload_used =
          !e.payload_pat.is_var() || vars->counts[e.payload_pat.var_id()] > 1;
      if (!payload_used && (e.word_pat.is_atom() || e.word_pat.is_var())) {
        os << '@' << term_named(e.word_pat, vars);
      } else {
        os << "@terminal(" << term_named(e.word_pat, vars) << ','
           << term_named(e.payload_pat, vars) << ')';
      }
      return;
    }
    case RhsExpr::Kind::Call:
      os << term_named(e.goal, vars);
      return;
    case RhsExpr::Kind::IgnoreCall:
      os << "ignore";
      if (e.ignore_name) os << '(' << e.ignore_name->str() << ')';
      return;
    case RhsExpr::Kind::Builtin: {
      const BuiltinConstraint& c = *e.builtin;
      os << '{';
      switch (c.kind) {
        case BuiltinConstraint::Kind::Unify:
          os << term_named(c.args[0], vars) << " = "
             << term_named(c.args[1], vars);
          break;
        case BuiltinConstraint::Kind::Compare: {
          const char* op = c.op == BuiltinConstraint::CmpOp::Lt   ? "<"
                           : c.op == BuiltinConstraint::CmpOp::Le ? "=<"
                           : c.op == BuiltinConstraint::CmpOp::Ge ? ">="
                                                                  : ">";
          os << term_named(c.args[0], vars) << ' ' << op << ' '
             << term_named(c.args[1], vars);
          break;
        }
        case BuiltinConstraint::Kind::Append:
          os << "append(" << term_named(c.args[0], vars) << ','
             << term_named(c.args[1], vars) << ','
             << term_named(c.args[2], vars) << ')';
          break;
        case BuiltinConstraint::Kind::MinList:
          os << "minlist(" << term_named(c.args[0], vars) << ','
             << term_named(c.args[1], vars) << ')';
          break;
        case BuiltinConstraint::Kind::Member:
          os << "member(" << term_named(c.args[0], vars) << ','
             << term_named(c.args[1], vars) << ')';
          break;
        case BuiltinConstraint::Kind::NotMember:
          os << "notmember(" << term_named(c.args[0], vars) << ','
             << term_named(c.args[1], vars) << ')';
          break;
        case BuiltinConstraint::Kind::ThesaurusLookup:
          os << "thesaurus(" << term_named(c.args[0], vars) << ','
             << term_named(c.args[1], vars) << ')';
          break;
      }
      os << '}';
      return;
    }
  }
}

void count_rhs_vars(const RhsExpr& e, VarNames* vars) {
  switch (e.kind) {
    case RhsExpr::Kind::TerminalMatch:
      vars->count(e.word_pat);
      vars->count(e.payload_pat);
      return;
    case RhsExpr::Kind::Call:
      vars->count(e.goal);
      return;
    case RhsExpr::Kind::Builtin:
      for (const Term& a : e.builtin->args) vars->count(a);
      return;
    default:
      for (const RhsPtr& k : e.kids) count_rhs_vars(*k, vars);
      return;
  }
}

}  // namespace

std::string pretty_print(const Grammar& g) {
  std::ostringstream os;
  for (const Rule& r : g.rules) {
    VarNames vars;
    vars.count(r.lhs);
    count_rhs_vars(*r.body, &vars);
    if (r.kind == Rule::Kind::Ignore) os << "ignore ";
    os << term_named(r.lhs, &vars);
    if (r.threshold) os << " #" << r.threshold->str();
    os << " ~~>\n    ";
    std::ostringstream body;
    print_rhs(body, *r.body, kDisj, &vars);
    os << body.str() << ".\n\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// validation

namespace {

void walk_rhs(const RhsExpr& e,
              const std::function<void(const RhsExpr&)>& fn) {
  fn(e);
  for (const RhsPtr& k : e.kids) walk_rhs(*k, fn);
}

bool contains_head(const RhsExpr& e) {
  if (e.kind == RhsExpr::Kind::Head) return true;
  for (const RhsPtr& k : e.kids)
    if (contains_head(*k)) return true;
  return false;
}

}  // namespace

std::vector<Diagnostic> validate(const Grammar& g) {
  std::vector<Diagnostic> out;
  const Pred lhip_true{Symbol("lhip_true"), 0};

  // undefined nonterminals
  std::set<Pred> reported;
  for (const Rule& r : g.rules) {
    walk_rhs(*r.body, [&](const RhsExpr& e) {
      if (e.kind == RhsExpr::Kind::Call) {
        Pred p = e.goal.pred();
        if (p == lhip_true || g.defines(p) || reported.count(p)) return;
        reported.insert(p);
        out.push_back({Diagnostic::Severity::Error, r.line, r.col,
                       "undefined nonterminal " + p.str()});
      }
      if (e.kind == RhsExpr::Kind::IgnoreCall) {
        if (g.ignore_rules(e.ignore_name).empty()) {
          out.push_back({Diagnostic::Severity::Warning, r.line, r.col,
                         e.ignore_name
                             ? "no ignore rule named " + e.ignore_name->str()
                             : std::string("no ignore rules defined")});
        }
      }
    });
  }

  for (const Rule& r : g.rules) {
    // several heads in one sequence: the first one wins
    walk_rhs(*r.body, [&](const RhsExpr& e) {
      if (e.kind != RhsExpr::Kind::Seq) return;
      int heads = 0;
      for (const RhsPtr& k : e.kids)
        if (k->kind == RhsExpr::Kind::Head) ++heads;
      if (heads > 1)
        out.push_back({Diagnostic::Severity::Warning, r.line, r.col,
                       "sequence in " + r.pred().str() +
                           " marks " + std::to_string(heads) +
                           " heads; the first is used"});
    });
    // heads under negation or disjunction are local to that scope
    walk_rhs(*r.body, [&](const RhsExpr& e) {
      if (e.kind == RhsExpr::Kind::Negation && contains_head(*e.kids[0]))
        out.push_back({Diagnostic::Severity::Note, r.line, r.col,
                       "head inside negation in " + r.pred().str() +
                           " is local to the negated expression"});
      if (e.kind == RhsExpr::Kind::Disjunction &&
          (contains_head(*e.kids[0]) || contains_head(*e.kids[1])))
        out.push_back({Diagnostic::Severity::Note, r.line, r.col,
                       "head inside disjunction in " + r.pred().str() +
                           " is local to its disjunct"});
    });
  }

  // reachability from the start symbols
  if (!g.rules.empty()) {
    std::set<Pred> reach = g.start_symbols;
    bool uses_ignore_class = false;
    std::set<Symbol> named_ignores;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Rule& r : g.rules) {
        bool in = false;
        if (r.kind == Rule::Kind::Normal) {
          in = reach.count(r.pred()) > 0;
        } else {
          in = uses_ignore_class || named_ignores.count(r.pred().name) > 0;
        }
        if (!in) continue;
        walk_rhs(*r.body, [&](const RhsExpr& e) {
          if (e.kind == RhsExpr::Kind::Call) {
            if (reach.insert(e.goal.pred()).second) grew = true;
          } else if (e.kind == RhsExpr::Kind::IgnoreCall) {
            if (e.ignore_name) {
              if (named_ignores.insert(*e.ignore_name).second) grew = true;
            } else if (!uses_ignore_class) {
              uses_ignore_class = true;
              grew = true;
            }
          }
        });
      }
    }
    for (const Rule& r : g.rules) {
      bool reachable = r.kind == Rule::Kind::Normal
                           ? reach.count(r.pred()) > 0
                           : (uses_ignore_class ||
                              named_ignores.count(r.pred().name) > 0);
      if (!reachable)
        out.push_back({Diagnostic::Severity::Warning, r.line, r.col,
                       "rule " + r.pred().str() +
                           " is unreachable from the start symbols"});
    }
  }
  return out;
}

}  // namespace lhip
