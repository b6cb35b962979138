// SPDX-License-Identifier: Apache-2.0
#include "nestlp/text_io.hpp"

#include "nestlp/errors.hpp"

#include <cctype>
#include <sstream>

namespace nestlp {

SyntaxError::SyntaxError(const std::string& origin, std::size_t l, std::size_t c, const std::string& msg)
    : Error(origin + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {

enum class Tok { ident, kw_not, kw_true, kw_false, minus, lparen, rparen, comma, amp, pipe, semicolon, arrow, dot, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  Lexer(std::string_view text, const std::string& origin) : text_(text), origin_(origin) {}

  Token next() {
    skip_blank();
    Token t{Tok::end, {}, line_, col_};
    if (pos_ >= text_.size()) return t;
    char ch = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance();
      t.text = std::string(text_.substr(start, pos_ - start));
      if (t.text == "not") t.kind = Tok::kw_not;
      else if (t.text == "true") t.kind = Tok::kw_true;
      else if (t.text == "false") t.kind = Tok::kw_false;
      else if (!Atom::valid_name(t.text))
        throw SyntaxError(origin_, t.line, t.column, "invalid atom name '" + t.text + "' (atoms start with a lowercase letter)");
      else t.kind = Tok::ident;
      return t;
    }
    advance();
    switch (ch) {
      case '-': t.kind = Tok::minus; break;
      case '(': t.kind = Tok::lparen; break;
      case ')': t.kind = Tok::rparen; break;
      case ',': t.kind = Tok::comma; break;
      case '&': t.kind = Tok::amp; break;
      case '|': t.kind = Tok::pipe; break;
      case ';': t.kind = Tok::semicolon; break;
      case '.': t.kind = Tok::dot; break;
      case ':':
        if (pos_ < text_.size() && text_[pos_] == '-') {
          advance();
          t.kind = Tok::arrow;
          break;
        }
        [[fallthrough]];
      default:
        throw SyntaxError(origin_, t.line, t.column, std::string("unexpected character '") + ch + "'");
    }
    return t;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  const std::string& origin_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const std::string& origin, ParseOptions opts)
      : lex_(text, origin), origin_(origin), opts_(opts) {
    cur_ = lex_.next();
  }

  Program program() {
    Program p;
    while (cur_.kind != Tok::end) p.add(rule());
    return p;
  }

  Expression lone_expression() {
    Expression e = expr();
    if (cur_.kind != Tok::end) fail("unexpected input after expression");
    return e;
  }

 private:
  Rule rule() {
    if (cur_.kind == Tok::dot) fail("empty rule");
    Expression head = Expression::bottom();
    Expression body = Expression::top();
    if (cur_.kind != Tok::arrow) head = expr();
    if (cur_.kind == Tok::arrow) {
      shift();
      body = expr();
    }
    if (cur_.kind != Tok::dot) fail("expected '.' at end of rule");
    shift();
    return {std::move(head), std::move(body)};
  }

  Expression expr() {
    Expression e = conj();
    while (cur_.kind == Tok::pipe || cur_.kind == Tok::semicolon || (cur_.kind == Tok::ident && cur_.text == "v")) {
      shift();
      e = Expression::disj(std::move(e), conj());
    }
    return e;
  }

  Expression conj() {
    Expression e = neg();
    while (cur_.kind == Tok::comma || cur_.kind == Tok::amp) {
      shift();
      e = Expression::conj(std::move(e), neg());
    }
    return e;
  }

  Expression neg() {
    if (cur_.kind == Tok::kw_not || cur_.kind == Tok::minus) {
      shift();
      return Expression::negate(neg());
    }
    return prim();
  }

  Expression prim() {
    switch (cur_.kind) {
      case Tok::kw_true: shift(); return Expression::top();
      case Tok::kw_false: shift(); return Expression::bottom();
      case Tok::ident: {
        if (!opts_.allow_reserved && Atom::reserved(cur_.text))
          throw ReservedAtomError(origin_, cur_.line, cur_.column,
                                  "atom '" + cur_.text + "' uses a reserved prefix (l_ or n_)");
        Expression e = Expression::var(cur_.text);
        shift();
        return e;
      }
      case Tok::lparen: {
        shift();
        Expression e = expr();
        if (cur_.kind != Tok::rparen) fail("expected ')'");
        shift();
        return e;
      }
      default: fail("expected an expression");
    }
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(origin_, cur_.line, cur_.column, msg); }

  void shift() { cur_ = lex_.next(); }

  Lexer lex_;
  const std::string& origin_;
  ParseOptions opts_;
  Token cur_;
};

// Binding strength for printing.
int strength(const Expression& e) {
  switch (e.connective()) {
    case Connective::disjunction: return 1;
    case Connective::conjunction: return 2;
    case Connective::negation: return 3;
    default: return 4;
  }
}

void print(std::ostream& os, const Expression& e) {
  auto sub = [&os](const Expression& c, bool parens) {
    if (parens) os << '(';
    print(os, c);
    if (parens) os << ')';
  };
  switch (e.connective()) {
    case Connective::top: os << "true"; break;
    case Connective::bottom: os << "false"; break;
    case Connective::atom: os << e.atom().name(); break;
    case Connective::negation:
      os << "not ";
      sub(e.operand(), strength(e.operand()) < 3);
      break;
    case Connective::conjunction:
    case Connective::disjunction: {
      int s = strength(e);
      sub(e.lhs(), strength(e.lhs()) < s);
      os << (e.is(Connective::conjunction) ? ", " : " | ");
      sub(e.rhs(), strength(e.rhs()) <= s);
      break;
    }
  }
}

void print(std::ostream& os, const Rule& r) {
  bool has_body = !r.body.is(Connective::top);
  if (!r.head.is(Connective::bottom) || !has_body) print(os, r.head);
  if (has_body) {
    if (!r.head.is(Connective::bottom)) os << ' ';
    os << ":- ";
    print(os, r.body);
  }
  os << '.';
}

}  // namespace

Program parse(const SourceProgram& source, ParseOptions opts) {
  return Parser(source.text, source.origin, opts).program();
}

Expression parse_expression(std::string_view text, ParseOptions opts) {
  static const std::string origin = "<expression>";
  return Parser(text, origin, opts).lone_expression();
}

std::string to_string(const Expression& e) {
  std::ostringstream os;
  print(os, e);
  return os.str();
}

std::string to_string(const Rule& r) {
  std::ostringstream os;
  print(os, r);
  return os.str();
}

std::string print_nested(const Program& p) {
  std::ostringstream os;
  for (const auto& r : p.rules()) {
    print(os, r);
    os << '\n';
  }
  return os.str();
}

std::string print_dlv(const Program& p) {
  std::ostringstream os;
  std::size_t index = 0;
  for (const auto& r : p.rules()) {
    ++index;
    if (!in_class(r, ProgramClass::disjunctive))
      throw PreconditionError("not in disjunctive form: rule " + std::to_string(index) + " '" + to_string(r) + "'");

    bool never_violated = false;
    std::vector<std::string> head;
    for (const auto& d : disjuncts(r.head)) {
      if (d.is(Connective::top)) never_violated = true;
      else if (d.is(Connective::atom)) head.push_back(d.atom().name());
    }
    std::vector<std::string> body;
    for (const auto& c : conjuncts(r.body)) {
      if (c.is(Connective::atom)) {
        body.push_back(c.atom().name());
      } else if (c.is(Connective::bottom)) {
        never_violated = true;
      } else if (c.is(Connective::negation)) {
        const auto& v = c.operand();
        if (v.is(Connective::atom)) body.push_back("not " + v.atom().name());
        else if (v.is(Connective::top)) never_violated = true;
      }
    }
    if (never_violated) {
      os << "% tautology: " << to_string(r) << '\n';
      continue;
    }
    for (std::size_t i = 0; i < head.size(); ++i) os << (i ? " v " : "") << head[i];
    if (head.empty() && body.empty()) {
      os << ":- true.\n";
      continue;
    }
    if (!body.empty()) {
      os << (head.empty() ? ":- " : " :- ");
      for (std::size_t i = 0; i < body.size(); ++i) os << (i ? ", " : "") << body[i];
    }
    os << ".\n";
  }
  return os.str();
}

}  // namespace nestlp
