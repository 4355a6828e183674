#include "alw/formula.hpp"

#include <cctype>

namespace alw {

namespace {

enum class Tok { Ident, Bot, Top, Arrow, DArrow, Star, Amp, Pipe, Hash, Caret, LParen, RParen, End };

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  size_t tok_pos = 0;

  explicit Lexer(const std::string& t) : text(t) { next(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_pos, msg); }

  void next() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) { tok = Tok::End; return; }
    char c = text[pos];
    if (std::isalpha((unsigned char)c)) {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        ++pos;
      ident = text.substr(start, pos - start);
      tok = ident == "bot" ? Tok::Bot : ident == "top" ? Tok::Top : Tok::Ident;
      return;
    }
    ++pos;
    switch (c) {
      case '*': tok = Tok::Star; return;
      case '&': tok = Tok::Amp; return;
      case '|': tok = Tok::Pipe; return;
      case '#': tok = Tok::Hash; return;
      case '^': tok = Tok::Caret; return;
      case '(': tok = Tok::LParen; return;
      case ')': tok = Tok::RParen; return;
      case '-':
        if (pos < text.size() && text[pos] == '>') { ++pos; tok = Tok::Arrow; return; }
        throw ParseError(tok_pos, "expected '->'");
      case '=':
        if (pos < text.size() && text[pos] == '>') { ++pos; tok = Tok::DArrow; return; }
        throw ParseError(tok_pos, "expected '=>'");
      default:
        throw ParseError(tok_pos, std::string("unexpected character '") + c + "'");
    }
  }
};

struct Parser {
  Lexer lx;
  explicit Parser(const std::string& t) : lx(t) {}

  FormulaPtr imp() {
    FormulaPtr l = mid();
    if (lx.tok == Tok::Arrow || lx.tok == Tok::DArrow) {
      bool strong = lx.tok == Tok::DArrow;
      lx.next();
      FormulaPtr r = imp();
      return strong ? f_simp(l, r) : f_lolly(l, r);
    }
    return l;
  }

  FormulaPtr mid() {
    FormulaPtr l = ten();
    if (lx.tok == Tok::Amp || lx.tok == Tok::Pipe || lx.tok == Tok::Hash) {
      Tok op = lx.tok;
      lx.next();
      FormulaPtr r = ten();
      // non-associative: a second &/|/# at the same level is a syntax error
      if (lx.tok == Tok::Amp || lx.tok == Tok::Pipe || lx.tok == Tok::Hash)
        lx.fail("'&', '|' and '#' do not associate; parenthesize");
      return op == Tok::Amp ? f_cap(l, r) : op == Tok::Pipe ? f_cup(l, r) : f_nor(l, r);
    }
    return l;
  }

  FormulaPtr ten() {
    FormulaPtr l = post();
    while (lx.tok == Tok::Star) {
      lx.next();
      l = f_tensor(l, post());
    }
    return l;
  }

  FormulaPtr post() {
    FormulaPtr f = atom();
    while (lx.tok == Tok::Caret) {
      lx.next();
      f = f_neg(f);
    }
    return f;
  }

  FormulaPtr atom() {
    switch (lx.tok) {
      case Tok::Ident: {
        FormulaPtr f = f_atom(lx.ident);
        lx.next();
        return f;
      }
      case Tok::Bot: lx.next(); return f_bot();
      case Tok::Top: lx.next(); return f_top();
      case Tok::LParen: {
        lx.next();
        FormulaPtr f = imp();
        if (lx.tok != Tok::RParen) lx.fail("expected ')'");
        lx.next();
        return f;
      }
      default:
        lx.fail("expected a formula");
    }
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.imp();
  if (p.lx.tok != Tok::End) p.lx.fail("trailing input after formula");
  return f;
}

}  // namespace alw
