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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhip/grammar.hpp"

using namespace lhip;

namespace {

Grammar parse_ok(const std::string& text) {
  auto r = parse_grammar(text);
  for (const auto& d : r.diagnostics) INFO(d.str());
  REQUIRE(r.grammar.has_value());
  return *r.grammar;
}

int count_errors(const std::vector<Diagnostic>& ds) {
  int n = 0;
  for (const auto& d : ds)
    if (d.severity == Diagnostic::Severity::Error) ++n;
  return n;
}

}  // namespace

TEST_CASE("compound-noun rule parses to an adjacency of terminals") {
  Grammar g = parse_ok("noun(missionary_camp) ~~> @missionary : @camp.");
  REQUIRE(g.rules.size() == 1);
  const RhsExpr& body = *g.rules[0].body;
  REQUIRE(body.kind == RhsExpr::Kind::Adjacent);
  CHECK(body.kids[0]->kind == RhsExpr::Kind::TerminalMatch);
  CHECK(body.kids[1]->kind == RhsExpr::Kind::TerminalMatch);
  CHECK(body.kids[0]->word_pat.functor().str() == "missionary");
  CHECK(body.kids[1]->word_pat.functor().str() == "camp");
}

TEST_CASE("noun phrase rule parses negation, optional and head") {
  Grammar g = parse_ok(
      "np(propernoun(N,Mods)) ~~> ~ determiner(_), (? adjectives(Mods) ?), "
      "* noun(N).");
  const RhsExpr& body = *g.rules[0].body;
  REQUIRE(body.kind == RhsExpr::Kind::Seq);
  REQUIRE(body.kids.size() == 3);
  CHECK(body.kids[0]->kind == RhsExpr::Kind::Negation);
  CHECK(body.kids[0]->kids[0]->kind == RhsExpr::Kind::Call);
  CHECK(body.kids[1]->kind == RhsExpr::Kind::Optional);
  CHECK(body.kids[2]->kind == RhsExpr::Kind::Head);
  CHECK(body.kids[2]->kids[0]->goal.pred().str() == "noun/1");
}

TEST_CASE("empty text yields an empty grammar") {
  Grammar g = parse_ok("");
  CHECK(g.rules.empty());
  CHECK(g.start_symbols.empty());
}

TEST_CASE("disjunction with embedded unification parses") {
  Grammar g = parse_ok(
      "noun(X) ~~> (* @pussy, (? @cat ?); * @cat), {X = cat}.");
  const RhsExpr& body = *g.rules[0].body;
  REQUIRE(body.kind == RhsExpr::Kind::Seq);
  REQUIRE(body.kids.size() == 2);
  CHECK(body.kids[0]->kind == RhsExpr::Kind::Disjunction);
  CHECK(body.kids[1]->kind == RhsExpr::Kind::Builtin);
  CHECK(body.kids[1]->builtin->kind == BuiltinConstraint::Kind::Unify);
}

TEST_CASE("separator rules with quoted accented terminals parse") {
  Grammar g = parse_ok(
      "ann_query_separator #1.0 ~~> @terminal('téléphone',_).\n"
      "ann_query_separator #1.0 ~~> (@terminal('numéro',_) : "
      "@terminal('de',_) : (? @terminal('téléphone',_) ?)).\n");
  REQUIRE(g.rules.size() == 2);
  CHECK(g.rules[0].threshold == Rational(1));
  CHECK(g.rules[0].body->kind == RhsExpr::Kind::TerminalMatch);
  CHECK(g.rules[0].body->word_pat.functor().str() == "téléphone");
  CHECK(g.rules[1].body->kind == RhsExpr::Kind::Adjacent);
}

TEST_CASE("thresholds parse as exact fractions") {
  Grammar g = parse_ok(
      "a ~~> @x.\n"
      "b #1.0 ~~> @x.\n"
      "c #0.75 ~~> @x.\n"
      "d #0.0 ~~> @x.\n");
  CHECK_FALSE(g.rules[0].threshold.has_value());
  CHECK(*g.rules[1].threshold == Rational(1));
  CHECK(*g.rules[2].threshold == Rational(3, 4));
  CHECK(*g.rules[3].threshold == Rational(0));
}

TEST_CASE("threshold outside [0,1] is an error with no partial grammar") {
  auto r = parse_grammar("a #1.5 ~~> @x.");
  CHECK_FALSE(r.grammar.has_value());
  CHECK(count_errors(r.diagnostics) == 1);
  CHECK(r.diagnostics[0].line == 1);
}

TEST_CASE("syntax errors carry positions") {
  auto r = parse_grammar("a ~~> @x\nb ~~> @y.");
  CHECK_FALSE(r.grammar.has_value());
  REQUIRE(count_errors(r.diagnostics) >= 1);
  CHECK(r.diagnostics[0].line == 2);  // the missing '.' shows up at rule b
}

TEST_CASE("ignore rules and class invocation parse") {
  Grammar g = parse_ok(
      "names(X) ~~> * @a, ignore(spelling), ignore.\n"
      "ignore spelling ~~> @m.\n");
  REQUIRE(g.rules.size() == 2);
  CHECK(g.rules[1].kind == Rule::Kind::Ignore);
  CHECK(g.ignore_rules(std::nullopt).size() == 1);
  CHECK(g.ignore_rules(Symbol("spelling")).size() == 1);
  CHECK(g.ignore_rules(Symbol("other")).empty());
  const RhsExpr& body = *g.rules[0].body;
  CHECK(body.kids[1]->kind == RhsExpr::Kind::IgnoreCall);
  CHECK(body.kids[1]->ignore_name.has_value());
  CHECK(body.kids[2]->kind == RhsExpr::Kind::IgnoreCall);
  CHECK_FALSE(body.kids[2]->ignore_name.has_value());
}

TEST_CASE("source order indices strictly increase") {
  Grammar g = parse_ok("a ~~> @x.\nb ~~> @y.\nc ~~> @z.\n");
  for (size_t i = 0; i < g.rules.size(); ++i)
    CHECK(g.rules[i].index == static_cast<int>(i));
}

TEST_CASE("pretty print round trip is a fixed point") {
  const char* sources[] = {
      "s(conjunct(Conj,Sl,Sr)) ~~> s(Sl), * conjunction(Conj), s(Sr).\n"
      "conjunction(and) ~~> @and.\n"
      "s(x) ~~> @x.\n",

      "noun(X) ~~> (* @pussy, (? @cat ?); * @cat), {X = cat}.",

      "street_intro([T,Prep,Det],1) #1.0 ~~> * street_type(T), "
      "preposition(Prep), determiner(Det).\n"
      "street_type(terminal(X,P)) ~~> @terminal(X,P), "
      "{thesaurus(street,W), member(X,W)}.\n"
      "preposition(terminal(X,P)) ~~> @terminal(X,P), "
      "{thesaurus(preposition,W), member(X,W)}.\n"
      "determiner(terminal(X,P)) ~~> @terminal(X,P), "
      "{thesaurus(determiner,W), member(X,W)}.\n",

      "found_street_name(L,Conf) #1.0 ~~> * street_intro(Intro,Conf), "
      "name_list(X), {append(Intro,X,L)}.\n"
      "found_street_name(X,0.3) ~~> * name_list(X).\n"
      "hyp_street_name(Street,Conf) ~~> * found_street_name(Street,Conf).\n"
      "hyp_street_name([],1) ~~> ~ found_street_name(_,_), lhip_true.\n"
      "street_intro([a],1) ~~> @a.\n"
      "name_list([N|R]) ~~> * @terminal(N,_) : (? name_list(R) ?).\n",
  };
  for (const char* src : sources) {
    CAPTURE(src);
    Grammar g1 = parse_ok(src);
    std::string p1 = pretty_print(g1);
    Grammar g2 = parse_ok(p1);
    std::string p2 = pretty_print(g2);
    CHECK(p1 == p2);
    Grammar g3 = parse_ok(p2);
    CHECK(pretty_print(g3) == p2);
  }
}

TEST_CASE("validate flags undefined nonterminals") {
  Grammar g = parse_ok("s(X) ~~> np(X).");
  auto ds = validate(g);
  REQUIRE(ds.size() >= 1);
  CHECK(ds[0].severity == Diagnostic::Severity::Error);
  CHECK(ds[0].message.find("np/1") != std::string::npos);
}

TEST_CASE("validate notes a head inside a disjunction, not an error") {
  Grammar g = parse_ok("noun(X) ~~> (* @pussy, (? @cat ?); * @cat), {X = cat}.");
  auto ds = validate(g);
  bool note = false;
  for (const auto& d : ds) {
    CHECK(d.severity != Diagnostic::Severity::Error);
    if (d.severity == Diagnostic::Severity::Note &&
        d.message.find("disjunction") != std::string::npos)
      note = true;
  }
  CHECK(note);
}

TEST_CASE("validate warns on several heads in one sequence") {
  Grammar g = parse_ok("s(A,B) ~~> * a(A), * b(B).\na(x) ~~> @x.\nb(y) ~~> @y.\n");
  auto ds = validate(g);
  bool warned = false;
  for (const auto& d : ds)
    if (d.message.find("heads") != std::string::npos) warned = true;
  CHECK(warned);
}

TEST_CASE("validate warns on unreachable rules") {
  Grammar g = parse_ok("s(X) ~~> a(X).\na(x) ~~> @x.\nzzz(q) ~~> @q.\n");
  auto ds = validate(g);
  bool warned = false;
  for (const auto& d : ds)
    if (d.message.find("zzz/1") != std::string::npos &&
        d.message.find("unreachable") != std::string::npos)
      warned = true;
  CHECK(warned);
}

TEST_CASE("the transcribed street grammar validates cleanly") {
  // separator and street-introducer rules, with their lexical helpers
  Grammar g = parse_ok(
      "street_intro([T,Prep,Det],1) #1.0 ~~>\n"
      "    * street_type(T), preposition(Prep), determiner(Det).\n"
      "street_type(terminal(X,P)) ~~>\n"
      "    @terminal(X,P), {thesaurus(street,W), member(X,W)}.\n"
      "preposition(terminal(X,P)) ~~>\n"
      "    @terminal(X,P), {thesaurus(preposition,W), member(X,W)}.\n"
      "determiner(terminal(X,P)) ~~>\n"
      "    @terminal(X,P), {thesaurus(determiner,W), member(X,W)}.\n");
  auto ds = validate(g);
  for (const auto& d : ds) INFO(d.str());
  CHECK(ds.empty());
}

TEST_CASE("unknown builtin is rejected with a position") {
  auto r = parse_grammar("a(X) ~~> @x, {frobnicate(X)}.");
  CHECK_FALSE(r.grammar.has_value());
  REQUIRE(count_errors(r.diagnostics) >= 1);
  CHECK(r.diagnostics[0].message.find("frobnicate") != std::string::npos);
}
