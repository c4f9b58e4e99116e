#pragma once

/// Finite interpreted theories: a base first-order part (domain, predicates,
/// functions, constants) plus sentence constants bound to sentences of the
/// extended language. The bindings are the self-reference mechanism: a
/// binding may mention its own name or any other sentence constant.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/printer.hpp"

namespace veritas {

struct Signature {
  std::map<std::string, int> predicates;
  std::map<std::string, int> functions;
  std::set<std::string> constants;
  std::set<std::string> sentence_constants;

  static bool is_reserved(const std::string& name) {
    return name == "T" || name == "S" || name == "F" || name == "U" ||
           name == "D" || name == "forall" || name == "exists";
  }

  bool declares(const std::string& name) const {
    return predicates.count(name) || functions.count(name) ||
           constants.count(name) || sentence_constants.count(name);
  }

  void declare_predicate(const std::string& name, int arity) { declare(name); predicates[name] = arity; }
  void declare_function(const std::string& name, int arity) { declare(name); functions[name] = arity; }
  void declare_constant(const std::string& name) { declare(name); constants.insert(name); }
  void declare_sentence_constant(const std::string& name) { declare(name); sentence_constants.insert(name); }

 private:
  void declare(const std::string& name) {
    if (is_reserved(name)) throw reserved_symbol(name);
    if (declares(name)) throw duplicate_declaration(name);
  }
};

// An element of the extended domain: either a base element or a sentence.
class DomainElement {
 public:
  static DomainElement base(std::string name) {
    DomainElement e;
    e.base_ = std::move(name);
    return e;
  }
  static DomainElement sentence(FormulaPtr s) {
    DomainElement e;
    e.sent_ = std::move(s);
    return e;
  }

  bool is_sentence() const { return sent_ != nullptr; }
  const std::string& base_name() const { return base_; }
  const FormulaPtr& sent() const { return sent_; }

  friend int compare(const DomainElement& a, const DomainElement& b) {
    if (a.is_sentence() != b.is_sentence()) return a.is_sentence() ? 1 : -1;
    if (!a.is_sentence()) {
      if (int c = a.base_.compare(b.base_)) return c < 0 ? -1 : 1;
      return 0;
    }
    return compare(a.sent_, b.sent_);
  }
  friend bool operator==(const DomainElement& a, const DomainElement& b) { return compare(a, b) == 0; }
  friend bool operator<(const DomainElement& a, const DomainElement& b) { return compare(a, b) < 0; }

 private:
  std::string base_;
  FormulaPtr sent_;
};

struct Theory {
  Signature signature;
  std::vector<std::string> base_domain;  // declaration order; may be empty
  std::map<std::string, std::set<std::vector<std::string>>> pred_interp;
  std::map<std::string, std::map<std::vector<std::string>, std::string>> fun_interp;
  std::map<std::string, std::string> const_interp;
  std::map<std::string, FormulaPtr> constant_bindings;  // core sentences
  std::vector<std::string> binding_order;               // declaration order of `let`s

  bool has_element(const std::string& e) const {
    for (const auto& d : base_domain)
      if (d == e) return true;
    return false;
  }

  // The designated sentence used to totalize functions on sentence arguments:
  // the binding of the first declared sentence constant, else a fixed
  // closed fallback.
  FormulaPtr default_sentence() const {
    if (!binding_order.empty()) return constant_bindings.at(binding_order.front());
    return mk_s(mk_quote(mk_forall("x", mk_s(mk_var("x")))));
  }

  void validate() const;
};

// --- term denotation -------------------------------------------------------

// pre: t closed, all symbols declared in th.signature.
inline DomainElement denote(const TermPtr& t, const Theory& th) {
  switch (t->kind) {
    case TermKind::variable:
      throw internal_invariant_violation("denote applied to an open term");
    case TermKind::constant: {
      auto it = th.const_interp.find(t->name);
      if (it == th.const_interp.end()) throw unbound_constant(t->name);
      return DomainElement::base(it->second);
    }
    case TermKind::sentence_constant: {
      auto it = th.constant_bindings.find(t->name);
      if (it == th.constant_bindings.end()) throw unbound_constant(t->name);
      return DomainElement::sentence(it->second);
    }
    case TermKind::quote:
      return DomainElement::sentence(expand_sugar(t->quoted));
    case TermKind::neg_name: {
      DomainElement inner = denote(t->inner, th);
      if (!inner.is_sentence()) throw non_sentence_neg_name(to_text(t->inner));
      return DomainElement::sentence(mk_not(inner.sent()));
    }
    case TermKind::function_app: {
      std::vector<std::string> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) {
        DomainElement e = denote(a, th);
        // Functions are totalized on sentence arguments by a designated
        // constant value.
        if (e.is_sentence()) return DomainElement::sentence(th.default_sentence());
        args.push_back(e.base_name());
      }
      auto fit = th.fun_interp.find(t->name);
      if (fit == th.fun_interp.end())
        throw incomplete_interpretation("function '" + t->name + "' has no interpretation");
      auto vit = fit->second.find(args);
      if (vit == fit->second.end())
        throw incomplete_interpretation("function '" + t->name + "' is undefined on a tuple");
      return DomainElement::base(vit->second);
    }
  }
  throw internal_invariant_violation("unreachable term kind");
}

// A term denoting the given domain element, used wherever quantifier
// instances are built. Sentences are named by quotation; a base element needs
// some declared constant denoting it (theories loaded from files declare
// every element as a self-denoting constant).
inline TermPtr element_name(const DomainElement& e, const Theory& th) {
  if (e.is_sentence()) return mk_quote(e.sent());
  const std::string& el = e.base_name();
  auto it = th.const_interp.find(el);
  if (it != th.const_interp.end() && it->second == el) return mk_const(el);
  for (const auto& [c, v] : th.const_interp)
    if (v == el) return mk_const(c);
  throw incomplete_interpretation(
      "no constant names domain element '" + el + "' (required to instantiate quantifiers)");
}

// --- base atoms ------------------------------------------------------------

// Classical valuation of an atomic sentence whose head is not T: an
// interpreted predicate application or a sentencehood atom. Predicates are
// false as soon as any argument falls outside the base domain; S is true
// exactly on sentences. A name-negation term that fails to denote makes a
// predicate or S atom false (nothing is named, so nothing satisfies it).
inline bool base_atom_value(const FormulaPtr& a, const Theory& th) {
  switch (a->kind) {
    case FormulaKind::s_atom: {
      try {
        return denote(a->term, th).is_sentence();
      } catch (const non_sentence_neg_name&) {
        return false;
      }
    }
    case FormulaKind::pred_app: {
      std::vector<std::string> args;
      args.reserve(a->args.size());
      for (const auto& t : a->args) {
        DomainElement e;
        try {
          e = denote(t, th);
        } catch (const non_sentence_neg_name&) {
          return false;
        }
        if (e.is_sentence()) return false;
        args.push_back(e.base_name());
      }
      auto it = th.pred_interp.find(a->name);
      if (it == th.pred_interp.end()) return false;
      return it->second.count(args) > 0;
    }
    default:
      throw internal_invariant_violation("base_atom_value applied to a non-base atom");
  }
}

// --- validation ------------------------------------------------------------

inline void Theory::validate() const {
  for (const auto& e : base_domain) {
    int n = 0;
    for (const auto& d : base_domain)
      if (d == e) ++n;
    if (n != 1) throw duplicate_declaration(e);
  }
  for (const auto& [name, tuples] : pred_interp) {
    auto it = signature.predicates.find(name);
    if (it == signature.predicates.end()) throw unknown_symbol(name);
    for (const auto& tup : tuples) {
      if (static_cast<int>(tup.size()) != it->second)
        throw arity_mismatch(name, it->second, static_cast<int>(tup.size()));
      for (const auto& e : tup)
        if (!has_element(e)) throw unknown_symbol(e);
    }
  }
  for (const auto& [name, arity] : signature.functions) {
    auto it = fun_interp.find(name);
    if (it == fun_interp.end())
      throw incomplete_interpretation("function '" + name + "' has no interpretation");
    // Totality over base_domain^arity.
    std::size_t expected = 1;
    for (int i = 0; i < arity; ++i) expected *= base_domain.size();
    if (it->second.size() != expected)
      throw incomplete_interpretation("function '" + name + "' is not total on the domain");
    for (const auto& [tup, val] : it->second) {
      if (static_cast<int>(tup.size()) != arity)
        throw arity_mismatch(name, arity, static_cast<int>(tup.size()));
      for (const auto& e : tup)
        if (!has_element(e)) throw unknown_symbol(e);
      if (!has_element(val)) throw unknown_symbol(val);
    }
  }
  for (const auto& name : signature.constants) {
    auto it = const_interp.find(name);
    if (it == const_interp.end()) throw unbound_constant(name);
    if (!has_element(it->second)) throw unknown_symbol(it->second);
  }
  for (const auto& name : signature.sentence_constants) {
    auto it = constant_bindings.find(name);
    if (it == constant_bindings.end()) throw unbound_constant(name);
    if (!is_sentence(it->second)) throw not_a_sentence(to_text(it->second));
    if (!is_core(it->second))
      throw internal_invariant_violation("binding of '" + name + "' is not sugar-free");
  }
  if (binding_order.size() != signature.sentence_constants.size())
    throw internal_invariant_violation("binding order out of sync with signature");
}

}  // namespace veritas
