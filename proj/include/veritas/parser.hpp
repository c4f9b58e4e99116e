#pragma once

/// Recursive-descent parser for the concrete formula syntax.
///
///   formula   := iff
///   iff       := imp ("<->" iff)?                  right associative
///   imp       := or ("->" imp)?                    right associative
///   or        := and ("|" and)*
///   and       := unary ("&" unary)*
///   unary     := "~" unary | quant | atom
///   quant     := ("forall" | "exists") VAR "." formula      maximal scope
///   atom      := ("T"|"S"|"F"|"U"|"D") "(" term ")"
///              | PRED "(" term-list? ")"
///              | "(" formula ")"
///              | term "=" term                     needs a declared "=" predicate
///   term      := "!" term | "[" formula "]" | NAME | FUN "(" term-list ")"
///
/// Identifiers are [A-Za-z0-9_]+; all symbols except quantified variables must
/// be declared in the signature. Concrete-syntax formulas are always closed
/// (a bare identifier that is not bound and not declared is an error); open
/// formulas exist only as ASTs.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory.hpp"

namespace veritas {

namespace detail {

enum class Tok {
  ident, kw_forall, kw_exists,
  lparen, rparen, lbracket, rbracket,
  comma, dot, tilde, amp, pipe, arrow, darrow, eq, bang,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::kw_forall: return "'forall'";
    case Tok::kw_exists: return "'exists'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::tilde: return "'~'";
    case Tok::amp: return "'&'";
    case Tok::pipe: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::darrow: return "'<->'";
    case Tok::eq: return "'='";
    case Tok::bang: return "'!'";
    case Tok::end: return "end of input";
  }
  return "?";
}

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline std::vector<Token> tokenize(const std::string& text, int start_line = 1) {
  std::vector<Token> out;
  int line = start_line, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s) { out.push_back({k, std::move(s), line, col}); };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      if (word == "forall") push(Tok::kw_forall, word);
      else if (word == "exists") push(Tok::kw_exists, word);
      else push(Tok::ident, word);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Tok::lparen, "("); break;
      case ')': push(Tok::rparen, ")"); break;
      case '[': push(Tok::lbracket, "["); break;
      case ']': push(Tok::rbracket, "]"); break;
      case ',': push(Tok::comma, ","); break;
      case '.': push(Tok::dot, "."); break;
      case '~': push(Tok::tilde, "~"); break;
      case '&': push(Tok::amp, "&"); break;
      case '|': push(Tok::pipe, "|"); break;
      case '=': push(Tok::eq, "="); break;
      case '!': push(Tok::bang, "!"); break;
      case '<':
        if (text.compare(i, 3, "<->") == 0) {
          push(Tok::darrow, "<->");
          col += 2;
          i += 2;
          break;
        }
        throw syntax_error("stray '<' (expected '<->')", line, col);
      case '-':
        if (text.compare(i, 2, "->") == 0) {
          push(Tok::arrow, "->");
          ++col;
          ++i;
          break;
        }
        throw syntax_error("stray '-' (expected '->')", line, col);
      default:
        throw syntax_error(std::string("unexpected character '") + c + "'", line, col);
    }
    ++col;
    ++i;
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class FormulaParser {
 public:
  FormulaParser(std::vector<Token> tokens, const Signature& sig)
      : toks_(std::move(tokens)), sig_(sig) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    expect(Tok::end);
    return f;
  }

 private:
  std::vector<Token> toks_;
  const Signature& sig_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  Token expect(Tok k) {
    if (!at(k))
      throw syntax_error(std::string("expected ") + tok_name(k) + ", found " +
                             tok_name(peek().kind),
                         peek().line, peek().col);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw syntax_error(msg, peek().line, peek().col);
  }

  bool is_bound(const std::string& name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == name) return true;
    return false;
  }

  FormulaPtr formula() { return iff(); }

  FormulaPtr iff() {
    FormulaPtr lhs = imp();
    if (at(Tok::darrow)) {
      next();
      return mk_iff(std::move(lhs), iff());
    }
    return lhs;
  }

  FormulaPtr imp() {
    FormulaPtr lhs = disj();
    if (at(Tok::arrow)) {
      next();
      return mk_imp(std::move(lhs), imp());
    }
    return lhs;
  }

  FormulaPtr disj() {
    FormulaPtr lhs = conj();
    while (at(Tok::pipe)) {
      next();
      lhs = mk_or(std::move(lhs), conj());
    }
    return lhs;
  }

  FormulaPtr conj() {
    FormulaPtr lhs = unary();
    while (at(Tok::amp)) {
      next();
      lhs = mk_and(std::move(lhs), unary());
    }
    return lhs;
  }

  FormulaPtr unary() {
    if (at(Tok::tilde)) {
      next();
      return mk_not(unary());
    }
    if (at(Tok::kw_forall) || at(Tok::kw_exists)) return quantified();
    return atom();
  }

  FormulaPtr quantified() {
    bool universal = next().kind == Tok::kw_forall;
    Token var = expect(Tok::ident);
    if (sig_.is_reserved(var.text) || sig_.declares(var.text))
      throw syntax_error("quantifier cannot bind declared or reserved name '" + var.text + "'",
                         var.line, var.col);
    expect(Tok::dot);
    bound_.push_back(var.text);
    FormulaPtr body = formula();  // scope extends maximally right
    bound_.pop_back();
    return universal ? mk_forall(var.text, std::move(body))
                     : mk_exists(var.text, std::move(body));
  }

  static FormulaKind term_atom_kind(const std::string& head) {
    if (head == "T") return FormulaKind::t_atom;
    if (head == "S") return FormulaKind::s_atom;
    if (head == "F") return FormulaKind::f_atom;
    if (head == "U") return FormulaKind::u_atom;
    return FormulaKind::d_atom;
  }

  FormulaPtr atom() {
    if (at(Tok::lparen)) {
      next();
      FormulaPtr f = formula();
      expect(Tok::rparen);
      return f;
    }
    if (at(Tok::ident)) {
      const std::string& word = peek().text;
      if (word == "T" || word == "S" || word == "F" || word == "U" || word == "D") {
        Token head = next();
        expect(Tok::lparen);
        TermPtr t = term();
        expect(Tok::rparen);
        return detail::mk_term_atom(term_atom_kind(head.text), std::move(t));
      }
      if (sig_.predicates.count(word) && toks_[pos_ + 1].kind == Tok::lparen)
        return pred_app();
    }
    // Fall through to an equality atom: term "=" term.
    TermPtr lhs = term();
    Token op = expect(Tok::eq);
    auto it = sig_.predicates.find("=");
    if (it == sig_.predicates.end())
      throw syntax_error("'=' is not declared in this theory", op.line, op.col);
    if (it->second != 2)
      throw arity_mismatch("=", it->second, 2);
    TermPtr rhs = term();
    return mk_pred("=", {std::move(lhs), std::move(rhs)});
  }

  FormulaPtr pred_app() {
    Token head = next();
    int arity = sig_.predicates.at(head.text);
    expect(Tok::lparen);
    std::vector<TermPtr> args;
    if (!at(Tok::rparen)) {
      args.push_back(term());
      while (at(Tok::comma)) {
        next();
        args.push_back(term());
      }
    }
    expect(Tok::rparen);
    if (static_cast<int>(args.size()) != arity)
      throw arity_mismatch(head.text, arity, static_cast<int>(args.size()));
    return mk_pred(head.text, std::move(args));
  }

  TermPtr term() {
    if (at(Tok::bang)) {
      next();
      return mk_neg_name(term());
    }
    if (at(Tok::lbracket)) {
      next();
      FormulaPtr f = formula();
      expect(Tok::rbracket);
      return mk_quote(std::move(f));
    }
    if (!at(Tok::ident)) fail(std::string("expected a term, found ") + tok_name(peek().kind));
    Token head = next();
    const std::string& word = head.text;
    if (is_bound(word)) return mk_var(word);
    if (sig_.constants.count(word)) return mk_const(word);
    if (sig_.sentence_constants.count(word)) return mk_sent_const(word);
    if (sig_.functions.count(word)) {
      int arity = sig_.functions.at(word);
      expect(Tok::lparen);
      std::vector<TermPtr> args;
      if (!at(Tok::rparen)) {
        args.push_back(term());
        while (at(Tok::comma)) {
          next();
          args.push_back(term());
        }
      }
      expect(Tok::rparen);
      if (static_cast<int>(args.size()) != arity)
        throw arity_mismatch(word, arity, static_cast<int>(args.size()));
      return mk_fun(word, std::move(args));
    }
    if (sig_.predicates.count(word))
      throw syntax_error("predicate symbol '" + word + "' used as a term", head.line, head.col);
    throw unknown_symbol(word);
  }
};

}  // namespace detail

// Parses a formula in the surface language. All predicate/function/constant
// symbols must be declared in the signature.
inline FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
  return detail::FormulaParser(detail::tokenize(text), sig).parse();
}

// Like parse_formula but additionally requires the result to be closed.
inline FormulaPtr parse_sentence(const std::string& text, const Signature& sig) {
  FormulaPtr f = parse_formula(text, sig);
  if (!is_sentence(f)) throw not_a_sentence(to_text(f));
  return f;
}

}  // namespace veritas
