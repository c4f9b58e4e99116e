#pragma once

/// Deterministic text rendering of terms and formulas. Printing then parsing
/// (against a signature declaring the symbols involved) reproduces the tree.
///
/// Binding strength: ~ binds tightest, then &, |, ->, <->; -> and <-> are
/// right associative, & and | left associative; quantifier scope extends
/// maximally to the right. Equality atoms are always parenthesized.

#include <string>

#include "veritas/ast.hpp"

namespace veritas {

namespace detail {

// Precedence levels used as "context" while printing. A child whose level is
// below the context gets parentheses.
constexpr int kLevelQuant = 0;
constexpr int kLevelIff = 1;
constexpr int kLevelImp = 2;
constexpr int kLevelOr = 3;
constexpr int kLevelAnd = 4;
constexpr int kLevelNeg = 5;
constexpr int kLevelAtom = 6;

void print_term(std::string& out, const TermPtr& t);
void print_formula(std::string& out, const FormulaPtr& f, int context);

inline void print_term(std::string& out, const TermPtr& t) {
  switch (t->kind) {
    case TermKind::variable:
    case TermKind::constant:
    case TermKind::sentence_constant:
      out += t->name;
      break;
    case TermKind::function_app:
      out += t->name;
      out += '(';
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) out += ", ";
        print_term(out, t->args[i]);
      }
      out += ')';
      break;
    case TermKind::quote:
      out += '[';
      print_formula(out, t->quoted, kLevelQuant);
      out += ']';
      break;
    case TermKind::neg_name:
      out += '!';
      print_term(out, t->inner);
      break;
  }
}

inline void print_term_atom(std::string& out, const char* head, const TermPtr& t) {
  out += head;
  out += '(';
  print_term(out, t);
  out += ')';
}

inline void print_binary(std::string& out, const FormulaPtr& f, int context, int level,
                         const char* op, bool right_assoc) {
  bool paren = level < context;
  if (paren) out += '(';
  print_formula(out, f->left, right_assoc ? level + 1 : level);
  out += ' ';
  out += op;
  out += ' ';
  print_formula(out, f->right, right_assoc ? level : level + 1);
  if (paren) out += ')';
}

inline void print_formula(std::string& out, const FormulaPtr& f, int context) {
  switch (f->kind) {
    case FormulaKind::pred_app:
      if (f->name == "=" && f->args.size() == 2) {
        out += '(';
        print_term(out, f->args[0]);
        out += " = ";
        print_term(out, f->args[1]);
        out += ')';
        break;
      }
      out += f->name;
      out += '(';
      for (std::size_t i = 0; i < f->args.size(); ++i) {
        if (i) out += ", ";
        print_term(out, f->args[i]);
      }
      out += ')';
      break;
    case FormulaKind::t_atom: print_term_atom(out, "T", f->term); break;
    case FormulaKind::s_atom: print_term_atom(out, "S", f->term); break;
    case FormulaKind::f_atom: print_term_atom(out, "F", f->term); break;
    case FormulaKind::u_atom: print_term_atom(out, "U", f->term); break;
    case FormulaKind::d_atom: print_term_atom(out, "D", f->term); break;
    case FormulaKind::neg: {
      bool paren = kLevelNeg < context;
      if (paren) out += '(';
      out += '~';
      print_formula(out, f->left, kLevelNeg);
      if (paren) out += ')';
      break;
    }
    case FormulaKind::conj: print_binary(out, f, context, kLevelAnd, "&", false); break;
    case FormulaKind::disj: print_binary(out, f, context, kLevelOr, "|", false); break;
    case FormulaKind::impl: print_binary(out, f, context, kLevelImp, "->", true); break;
    case FormulaKind::iff: print_binary(out, f, context, kLevelIff, "<->", true); break;
    case FormulaKind::forall:
    case FormulaKind::exists: {
      bool paren = context > kLevelQuant;
      if (paren) out += '(';
      out += f->kind == FormulaKind::forall ? "forall " : "exists ";
      out += f->name;
      out += ". ";
      print_formula(out, f->left, kLevelQuant);
      if (paren) out += ')';
      break;
    }
  }
}

}  // namespace detail

inline std::string to_text(const TermPtr& t) {
  std::string out;
  detail::print_term(out, t);
  return out;
}

inline std::string to_text(const FormulaPtr& f) {
  std::string out;
  detail::print_formula(out, f, detail::kLevelQuant);
  return out;
}

}  // namespace veritas
