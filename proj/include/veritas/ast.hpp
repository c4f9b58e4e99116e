#pragma once

/// Abstract syntax for the object language: first-order terms and formulas
/// with quotation terms, sentence constants, name-level negation, and a truth
/// predicate. Nodes are immutable and shared via shared_ptr; all operations
/// build fresh nodes.
///
/// The surface language has three derived atoms F(t), U(t), D(t) which
/// expand_sugar rewrites into the core language (T, S, predicates,
/// connectives, quantifiers only). Everything downstream of parsing works on
/// core formulas.

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "veritas/errors.hpp"

namespace veritas {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class TermKind {
  variable,
  constant,
  function_app,
  sentence_constant,
  quote,     // quotation name of a formula
  neg_name,  // name-level negation: names the negation of what the inner term names
};

struct Term {
  TermKind kind;
  std::string name;           // variable, constant, function symbol, sentence constant
  std::vector<TermPtr> args;  // function_app
  FormulaPtr quoted;          // quote
  TermPtr inner;              // neg_name
};

enum class FormulaKind {
  pred_app,
  t_atom,  // truth
  s_atom,  // sentencehood
  f_atom,  // surface only: falsity
  u_atom,  // surface only: undeterminedness
  d_atom,  // surface only: determinateness
  neg,
  conj,
  disj,
  impl,
  iff,
  forall,
  exists,
};

struct Formula {
  FormulaKind kind;
  std::string name;           // pred_app: predicate symbol; forall/exists: bound variable
  std::vector<TermPtr> args;  // pred_app
  TermPtr term;               // t/s/f/u/d atoms
  FormulaPtr left;            // unary child, left child, quantifier body
  FormulaPtr right;           // right child of binary connectives
};

inline bool is_quantifier(FormulaKind k) {
  return k == FormulaKind::forall || k == FormulaKind::exists;
}

inline bool is_binary(FormulaKind k) {
  return k == FormulaKind::conj || k == FormulaKind::disj ||
         k == FormulaKind::impl || k == FormulaKind::iff;
}

inline bool is_term_atom(FormulaKind k) {
  return k == FormulaKind::t_atom || k == FormulaKind::s_atom ||
         k == FormulaKind::f_atom || k == FormulaKind::u_atom ||
         k == FormulaKind::d_atom;
}

// --- factories -------------------------------------------------------------

inline TermPtr mk_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::variable;
  t->name = std::move(name);
  return t;
}

inline TermPtr mk_const(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::constant;
  t->name = std::move(name);
  return t;
}

inline TermPtr mk_fun(std::string name, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::function_app;
  t->name = std::move(name);
  t->args = std::move(args);
  return t;
}

inline TermPtr mk_sent_const(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::sentence_constant;
  t->name = std::move(name);
  return t;
}

inline TermPtr mk_quote(FormulaPtr f) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::quote;
  t->quoted = std::move(f);
  return t;
}

inline FormulaPtr mk_not(FormulaPtr f);

// Name negation over a quotation simplifies eagerly: !(quote f) is the
// quotation of ~f. Other inner terms are kept symbolic.
inline TermPtr mk_neg_name(TermPtr t) {
  if (t->kind == TermKind::quote) return mk_quote(mk_not(t->quoted));
  auto r = std::make_shared<Term>();
  r->kind = TermKind::neg_name;
  r->inner = std::move(t);
  return r;
}

inline FormulaPtr mk_pred(std::string name, std::vector<TermPtr> args) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::pred_app;
  f->name = std::move(name);
  f->args = std::move(args);
  return f;
}

namespace detail {
inline FormulaPtr mk_term_atom(FormulaKind k, TermPtr t) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->term = std::move(t);
  return f;
}
}  // namespace detail

inline FormulaPtr mk_t(TermPtr t) { return detail::mk_term_atom(FormulaKind::t_atom, std::move(t)); }
inline FormulaPtr mk_s(TermPtr t) { return detail::mk_term_atom(FormulaKind::s_atom, std::move(t)); }
inline FormulaPtr mk_f(TermPtr t) { return detail::mk_term_atom(FormulaKind::f_atom, std::move(t)); }
inline FormulaPtr mk_u(TermPtr t) { return detail::mk_term_atom(FormulaKind::u_atom, std::move(t)); }
inline FormulaPtr mk_d(TermPtr t) { return detail::mk_term_atom(FormulaKind::d_atom, std::move(t)); }

inline FormulaPtr mk_not(FormulaPtr f) {
  auto r = std::make_shared<Formula>();
  r->kind = FormulaKind::neg;
  r->left = std::move(f);
  return r;
}

namespace detail {
inline FormulaPtr mk_binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}
}  // namespace detail

inline FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return detail::mk_binary(FormulaKind::conj, std::move(a), std::move(b)); }
inline FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return detail::mk_binary(FormulaKind::disj, std::move(a), std::move(b)); }
inline FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b) { return detail::mk_binary(FormulaKind::impl, std::move(a), std::move(b)); }
inline FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) { return detail::mk_binary(FormulaKind::iff, std::move(a), std::move(b)); }

namespace detail {
inline FormulaPtr mk_quant(FormulaKind k, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(var);
  f->left = std::move(body);
  return f;
}
}  // namespace detail

inline FormulaPtr mk_forall(std::string var, FormulaPtr body) {
  return detail::mk_quant(FormulaKind::forall, std::move(var), std::move(body));
}
inline FormulaPtr mk_exists(std::string var, FormulaPtr body) {
  return detail::mk_quant(FormulaKind::exists, std::move(var), std::move(body));
}

// --- structural comparison -------------------------------------------------

// Total order on terms/formulas by structure. This is the canonical order
// used for node ids, report rows and hypothesis enumeration; it has no
// semantic meaning.
int compare(const TermPtr& a, const TermPtr& b);
int compare(const FormulaPtr& a, const FormulaPtr& b);

namespace detail {
template <typename T>
int compare_vec(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = compare(a[i], b[i])) return c;
  return 0;
}
}  // namespace detail

inline int compare(const TermPtr& a, const TermPtr& b) {
  if (a == b) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case TermKind::variable:
    case TermKind::constant:
    case TermKind::sentence_constant:
      return a->name.compare(b->name) < 0 ? -1 : (a->name == b->name ? 0 : 1);
    case TermKind::function_app:
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      return detail::compare_vec(a->args, b->args);
    case TermKind::quote:
      return compare(a->quoted, b->quoted);
    case TermKind::neg_name:
      return compare(a->inner, b->inner);
  }
  return 0;
}

inline int compare(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case FormulaKind::pred_app:
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      return detail::compare_vec(a->args, b->args);
    case FormulaKind::t_atom:
    case FormulaKind::s_atom:
    case FormulaKind::f_atom:
    case FormulaKind::u_atom:
    case FormulaKind::d_atom:
      return compare(a->term, b->term);
    case FormulaKind::neg:
      return compare(a->left, b->left);
    case FormulaKind::conj:
    case FormulaKind::disj:
    case FormulaKind::impl:
    case FormulaKind::iff:
      if (int c = compare(a->left, b->left)) return c;
      return compare(a->right, b->right);
    case FormulaKind::forall:
    case FormulaKind::exists:
      if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
      return compare(a->left, b->left);
  }
  return 0;
}

inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) == 0; }
inline bool equal(const TermPtr& a, const TermPtr& b) { return compare(a, b) == 0; }

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return compare(a, b) < 0; }
};

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return compare(a, b) < 0; }
};

// --- free variables --------------------------------------------------------

namespace detail {
void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out);
void collect_free(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out);

inline void collect_free(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::variable:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case TermKind::function_app:
      for (const auto& a : t->args) collect_free(a, bound, out);
      break;
    case TermKind::quote:
      // Quotation is transparent: a quoted open formula yields an open term.
      collect_free(t->quoted, bound, out);
      break;
    case TermKind::neg_name:
      collect_free(t->inner, bound, out);
      break;
    default:
      break;
  }
}

inline void collect_free(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::pred_app:
      for (const auto& a : f->args) collect_free(a, bound, out);
      break;
    case FormulaKind::t_atom:
    case FormulaKind::s_atom:
    case FormulaKind::f_atom:
    case FormulaKind::u_atom:
    case FormulaKind::d_atom:
      collect_free(f->term, bound, out);
      break;
    case FormulaKind::neg:
      collect_free(f->left, bound, out);
      break;
    case FormulaKind::conj:
    case FormulaKind::disj:
    case FormulaKind::impl:
    case FormulaKind::iff:
      collect_free(f->left, bound, out);
      collect_free(f->right, bound, out);
      break;
    case FormulaKind::forall:
    case FormulaKind::exists: {
      bool fresh = bound.insert(f->name).second;
      collect_free(f->left, bound, out);
      if (fresh) bound.erase(f->name);
      break;
    }
  }
}
}  // namespace detail

inline std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  detail::collect_free(f, bound, out);
  return out;
}

inline std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  detail::collect_free(t, bound, out);
  return out;
}

inline bool is_sentence(const FormulaPtr& f) { return free_vars(f).empty(); }

// --- substitution ----------------------------------------------------------

// Capture is impossible because only closed terms are substituted.
TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& repl);
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& repl);

inline TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& repl) {
  switch (t->kind) {
    case TermKind::variable:
      return t->name == var ? repl : t;
    case TermKind::function_app: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(substitute(a, var, repl));
      return mk_fun(t->name, std::move(args));
    }
    case TermKind::quote:
      return mk_quote(substitute(t->quoted, var, repl));
    case TermKind::neg_name:
      return mk_neg_name(substitute(t->inner, var, repl));
    default:
      return t;
  }
}

inline FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& repl) {
  switch (f->kind) {
    case FormulaKind::pred_app: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(substitute(a, var, repl));
      return mk_pred(f->name, std::move(args));
    }
    case FormulaKind::t_atom:
    case FormulaKind::s_atom:
    case FormulaKind::f_atom:
    case FormulaKind::u_atom:
    case FormulaKind::d_atom:
      return detail::mk_term_atom(f->kind, substitute(f->term, var, repl));
    case FormulaKind::neg:
      return mk_not(substitute(f->left, var, repl));
    case FormulaKind::conj:
    case FormulaKind::disj:
    case FormulaKind::impl:
    case FormulaKind::iff:
      return detail::mk_binary(f->kind, substitute(f->left, var, repl),
                               substitute(f->right, var, repl));
    case FormulaKind::forall:
    case FormulaKind::exists:
      if (f->name == var) return f;  // shadowed
      return detail::mk_quant(f->kind, f->name, substitute(f->left, var, repl));
  }
  return f;
}

// --- surface sugar ---------------------------------------------------------

TermPtr expand_sugar(const TermPtr& t);
FormulaPtr expand_sugar(const FormulaPtr& f);

inline TermPtr expand_sugar(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::function_app: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(expand_sugar(a));
      return mk_fun(t->name, std::move(args));
    }
    case TermKind::quote:
      return mk_quote(expand_sugar(t->quoted));
    case TermKind::neg_name:
      return mk_neg_name(expand_sugar(t->inner));
    default:
      return t;
  }
}

// Rewrites F/U/D atoms into the core language, everywhere including inside
// quotation terms:
//   F(t) -> T(!t)
//   U(t) -> ~T(t) & ~T(!t)
//   D(t) -> T(t) | T(!t)
// The result contains no f/u/d atoms; the function is idempotent.
inline FormulaPtr expand_sugar(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::pred_app: {
      std::vector<TermPtr> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(expand_sugar(a));
      return mk_pred(f->name, std::move(args));
    }
    case FormulaKind::t_atom:
      return mk_t(expand_sugar(f->term));
    case FormulaKind::s_atom:
      return mk_s(expand_sugar(f->term));
    case FormulaKind::f_atom:
      return mk_t(mk_neg_name(expand_sugar(f->term)));
    case FormulaKind::u_atom: {
      TermPtr t = expand_sugar(f->term);
      return mk_and(mk_not(mk_t(t)), mk_not(mk_t(mk_neg_name(t))));
    }
    case FormulaKind::d_atom: {
      TermPtr t = expand_sugar(f->term);
      return mk_or(mk_t(t), mk_t(mk_neg_name(t)));
    }
    case FormulaKind::neg:
      return mk_not(expand_sugar(f->left));
    case FormulaKind::conj:
    case FormulaKind::disj:
    case FormulaKind::impl:
    case FormulaKind::iff:
      return detail::mk_binary(f->kind, expand_sugar(f->left), expand_sugar(f->right));
    case FormulaKind::forall:
    case FormulaKind::exists:
      return detail::mk_quant(f->kind, f->name, expand_sugar(f->left));
  }
  return f;
}

namespace detail {
inline bool core_term(const TermPtr& t);
inline bool core_formula(const FormulaPtr& f);

inline bool core_term(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::function_app:
      return std::all_of(t->args.begin(), t->args.end(),
                         [](const TermPtr& a) { return core_term(a); });
    case TermKind::quote:
      return core_formula(t->quoted);
    case TermKind::neg_name:
      return core_term(t->inner);
    default:
      return true;
  }
}

inline bool core_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::f_atom:
    case FormulaKind::u_atom:
    case FormulaKind::d_atom:
      return false;
    case FormulaKind::pred_app:
      return std::all_of(f->args.begin(), f->args.end(),
                         [](const TermPtr& a) { return core_term(a); });
    case FormulaKind::t_atom:
    case FormulaKind::s_atom:
      return core_term(f->term);
    case FormulaKind::neg:
      return core_formula(f->left);
    case FormulaKind::conj:
    case FormulaKind::disj:
    case FormulaKind::impl:
    case FormulaKind::iff:
      return core_formula(f->left) && core_formula(f->right);
    case FormulaKind::forall:
    case FormulaKind::exists:
      return core_formula(f->left);
  }
  return true;
}
}  // namespace detail

// True when f is in the core language (no F/U/D atoms anywhere, including
// inside quotations).
inline bool is_core(const FormulaPtr& f) { return detail::core_formula(f); }

}  // namespace veritas
