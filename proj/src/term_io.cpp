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

#include "lhip/term_io.hpp"

#include <cctype>
#include <sstream>

namespace lhip {

namespace {
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident(char c) {
  return is_lower(c) || is_upper(c) || is_digit(c) || c == '_';
}
bool is_utf8_tail(unsigned char c) { return c >= 0x80; }
}  // namespace

Lexer::Lexer(std::string_view src) : src_(src) {}

const Token& Lexer::peek(size_t ahead) {
  while (buffer_.size() <= ahead) buffer_.push_back(lex());
  return buffer_[ahead];
}

Token Lexer::next() {
  peek(0);
  Token t = buffer_.front();
  buffer_.erase(buffer_.begin());
  return t;
}

bool Lexer::at_end() { return peek().kind == Token::Kind::End; }

Token Lexer::lex() {
  // skip whitespace and % comments
  while (pos_ < src_.size()) {
    char c = src_[pos_];
    if (c == '\n') {
      ++line_;
      col_ = 1;
      ++pos_;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++col_;
      ++pos_;
    } else if (c == '%') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    } else {
      break;
    }
  }
  Token t;
  t.line = line_;
  t.col = col_;
  if (pos_ >= src_.size()) {
    t.kind = Token::Kind::End;
    return t;
  }
  char c = src_[pos_];
  auto advance = [&](size_t n) {
    pos_ += n;
    col_ += static_cast<int>(n);
  };

  // bare atom: lowercase or non-ASCII start
  if (is_lower(c) || is_utf8_tail(static_cast<unsigned char>(c))) {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (is_ident(src_[pos_]) ||
            is_utf8_tail(static_cast<unsigned char>(src_[pos_])))) {
      advance(1);
    }
    t.kind = Token::Kind::Atom;
    t.text = std::string(src_.substr(start, pos_ - start));
    return t;
  }
  // variable
  if (is_upper(c) || c == '_') {
    size_t start = pos_;
    while (pos_ < src_.size() && is_ident(src_[pos_])) advance(1);
    t.kind = Token::Kind::Var;
    t.text = std::string(src_.substr(start, pos_ - start));
    return t;
  }
  // number (decimal point only when digits follow)
  if (is_digit(c)) {
    size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance(1);
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
        is_digit(src_[pos_ + 1])) {
      advance(1);
      while (pos_ < src_.size() && is_digit(src_[pos_])) advance(1);
    }
    auto r = Rational::parse(src_.substr(start, pos_ - start));
    if (!r) {
      t.kind = Token::Kind::Error;
      t.text = "malformed number";
      return t;
    }
    t.kind = Token::Kind::Number;
    t.num = *r;
    t.text = std::string(src_.substr(start, pos_ - start));
    return t;
  }
  // quoted atom
  if (c == '\'') {
    advance(1);
    std::string out;
    while (true) {
      if (pos_ >= src_.size()) {
        t.kind = Token::Kind::Error;
        t.text = "unterminated quoted atom";
        return t;
      }
      char q = src_[pos_];
      if (q == '\'') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '\'') {
          out.push_back('\'');
          advance(2);
          continue;
        }
        advance(1);
        break;
      }
      if (q == '\\' && pos_ + 1 < src_.size()) {
        char e = src_[pos_ + 1];
        if (e == '\'' || e == '\\') {
          out.push_back(e);
          advance(2);
          continue;
        }
        if (e == 'n') {
          out.push_back('\n');
          advance(2);
          continue;
        }
      }
      if (q == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        out.push_back(q);
        continue;
      }
      out.push_back(q);
      advance(1);
    }
    t.kind = Token::Kind::QAtom;
    t.text = out;
    return t;
  }
  // multi-char operators first
  auto starts = [&](std::string_view op) {
    return src_.substr(pos_).substr(0, op.size()) == op;
  };
  for (std::string_view op : {"~~>", ":-", "=<", ">="}) {
    if (starts(op)) {
      advance(op.size());
      t.kind = Token::Kind::Punct;
      t.text = std::string(op);
      return t;
    }
  }
  static const std::string singles = "()[]{},|;:~*@#?=<>.-+/";
  if (singles.find(c) != std::string::npos) {
    advance(1);
    t.kind = Token::Kind::Punct;
    t.text = std::string(1, c);
    return t;
  }
  t.kind = Token::Kind::Error;
  t.text = std::string("unexpected character '") + c + "'";
  return t;
}

std::optional<Term> TermParser::parse(std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<Term> {
    if (error) {
      const Token& tk = lex_->peek();
      std::ostringstream os;
      os << msg << " at line " << tk.line << ", column " << tk.col;
      *error = os.str();
    }
    return std::nullopt;
  };

  const Token& tk = lex_->peek();
  switch (tk.kind) {
    case Token::Kind::Error:
      return fail(tk.text);
    case Token::Kind::End:
      return fail("unexpected end of input");
    case Token::Kind::Var: {
      Token v = lex_->next();
      if (v.text == "_") return Term::var(gen_->fresh());
      auto it = names_.find(v.text);
      if (it == names_.end())
        it = names_.emplace(v.text, gen_->fresh()).first;
      return Term::var(it->second);
    }
    case Token::Kind::Number: {
      Token n = lex_->next();
      return Term::number(n.num);
    }
    case Token::Kind::Atom:
    case Token::Kind::QAtom: {
      Token a = lex_->next();
      if (lex_->peek().kind == Token::Kind::Punct &&
          lex_->peek().text == "(") {
        lex_->next();
        std::vector<Term> args;
        while (true) {
          auto arg = parse(error);
          if (!arg) return std::nullopt;
          args.push_back(*arg);
          const Token& sep = lex_->peek();
          if (sep.kind == Token::Kind::Punct && sep.text == ",") {
            lex_->next();
            continue;
          }
          if (sep.kind == Token::Kind::Punct && sep.text == ")") {
            lex_->next();
            break;
          }
          return fail("expected ',' or ')' in argument list");
        }
        return Term::compound(Symbol(a.text), std::move(args));
      }
      return Term::atom(Symbol(a.text));
    }
    case Token::Kind::Punct: {
      if (tk.text == "[") {
        lex_->next();
        std::vector<Term> elems;
        if (lex_->peek().kind == Token::Kind::Punct &&
            lex_->peek().text == "]") {
          lex_->next();
          return Term::nil();
        }
        while (true) {
          auto e = parse(error);
          if (!e) return std::nullopt;
          elems.push_back(*e);
          const Token& sep = lex_->peek();
          if (sep.kind == Token::Kind::Punct && sep.text == ",") {
            lex_->next();
            continue;
          }
          if (sep.kind == Token::Kind::Punct && sep.text == "|") {
            lex_->next();
            auto tail = parse(error);
            if (!tail) return std::nullopt;
            if (lex_->peek().kind != Token::Kind::Punct ||
                lex_->peek().text != "]")
              return fail("expected ']' after list tail");
            lex_->next();
            return Term::list(std::move(elems), *tail);
          }
          if (sep.kind == Token::Kind::Punct && sep.text == "]") {
            lex_->next();
            return Term::list(std::move(elems));
          }
          return fail("expected ',', '|' or ']' in list");
        }
      }
      if (tk.text == "-") {
        lex_->next();
        if (lex_->peek().kind == Token::Kind::Number) {
          Token n = lex_->next();
          return Term::number(Rational(0) - n.num);
        }
        return fail("expected a number after '-'");
      }
      if (tk.text == "(") {
        lex_->next();
        auto inner = parse(error);
        if (!inner) return std::nullopt;
        if (lex_->peek().kind != Token::Kind::Punct ||
            lex_->peek().text != ")")
          return fail("expected ')'");
        lex_->next();
        return inner;
      }
      return fail("unexpected token '" + tk.text + "'");
    }
  }
  return fail("unexpected token");
}

std::optional<Term> parse_term(std::string_view text, std::string* error) {
  Lexer lex(text);
  VarGen gen;
  TermParser parser(&lex, &gen);
  auto t = parser.parse(error);
  if (!t) return std::nullopt;
  if (!lex.at_end()) {
    if (error) *error = "trailing input after term";
    return std::nullopt;
  }
  return t;
}

namespace {

bool atom_needs_quotes(const std::string& name) {
  if (name.empty()) return true;
  if (!is_lower(name[0])) return true;
  for (char c : name)
    if (!is_ident(c)) return true;
  return false;
}

void print_atom(std::ostringstream& os, Symbol s) {
  const std::string& name = s.str();
  if (!atom_needs_quotes(name)) {
    os << name;
    return;
  }
  os << '\'';
  for (char c : name) {
    if (c == '\'')
      os << "\\'";
    else if (c == '\\')
      os << "\\\\";
    else
      os << c;
  }
  os << '\'';
}

void print_term(std::ostringstream& os, const Term& t,
                std::map<VarId, std::string>* canon, int* counter) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      print_atom(os, t.functor());
      return;
    case Term::Kind::Number:
      os << t.num().str();
      return;
    case Term::Kind::Var: {
      if (canon) {
        auto it = canon->find(t.var_id());
        if (it == canon->end()) {
          ++*counter;
          it = canon->emplace(t.var_id(), "_V" + std::to_string(*counter))
                   .first;
        }
        os << it->second;
      } else {
        os << "_G" << t.var_id();
      }
      return;
    }
    case Term::Kind::Compound: {
      print_atom(os, t.functor());
      os << '(';
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ',';
        print_term(os, t.args()[i], canon, counter);
      }
      os << ')';
      return;
    }
    case Term::Kind::List: {
      os << '[';
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ',';
        print_term(os, t.args()[i], canon, counter);
      }
      if (t.tail()) {
        os << '|';
        print_term(os, *t.tail(), canon, counter);
      }
      os << ']';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t, nullptr, nullptr);
  return os.str();
}

std::string canonical(const Term& t) {
  std::ostringstream os;
  std::map<VarId, std::string> canon;
  int counter = 0;
  print_term(os, t, &canon, &counter);
  return os.str();
}

}  // namespace lhip
