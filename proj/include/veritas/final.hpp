#pragma once

/// The final semantics: a total two-valued valuation built over the primary
/// one. Truth atoms stop being self-referential here — T(t) is true exactly
/// when t names a sentence whose primary value is true — so a structural
/// recursion with classical tables settles every sentence.
///
/// Sentences outside the closure are handled by a functional extension of
/// the primary valuation: a quantifier-free sentence whose dereferences
/// bottom out in the closure has a value forced by the fixed point, computed
/// by structural recursion. An unregistered quantified sentence has no such
/// forced value (its range membership would matter), so dereferencing one
/// raises outside_closure; re-running with the sentence as a closure seed
/// resolves it.

#include <map>
#include <optional>
#include <utility>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/fixpoint.hpp"
#include "veritas/graph.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory.hpp"
#include "veritas/truth.hpp"

namespace veritas {

class FinalValuation {
 public:
  FinalValuation(const Theory& th, const DepGraph& g, PrimaryValuation primary)
      : th_(&th), g_(&g), primary_(std::move(primary)) {}

  const PrimaryValuation& primary() const { return primary_; }

  // I_f. pre: s closed. Accepts surface sugar.
  bool eval(const FormulaPtr& s) const {
    FormulaPtr core = expand_sugar(s);
    if (!is_sentence(core)) throw not_a_sentence(to_text(core));
    return eval_core(core);
  }

  // The primary value of s: the stored value for closure sentences, else the
  // functionally forced value for quantifier-free sentences over the theory.
  // throws outside_closure when s (or a sentence it dereferences) is an
  // unregistered quantified sentence.
  truth3 primary_extended(const FormulaPtr& s) const {
    if (auto v = primary_.value_of(s)) return *v;
    if (auto it = pcache_.find(s); it != pcache_.end()) return it->second;
    truth3 v;
    switch (s->kind) {
      case FormulaKind::pred_app:
      case FormulaKind::s_atom:
        v = from_bool(base_atom_value(s, *th_));
        break;
      case FormulaKind::t_atom: {
        std::optional<DomainElement> e = try_denote(s->term);
        v = e && e->is_sentence() ? primary_extended(e->sent()) : truth3::falsum;
        break;
      }
      case FormulaKind::neg:
        v = neg3(primary_extended(s->left));
        break;
      case FormulaKind::conj:
        v = and3(primary_extended(s->left), primary_extended(s->right));
        break;
      case FormulaKind::disj:
        v = or3(primary_extended(s->left), primary_extended(s->right));
        break;
      case FormulaKind::impl:
        v = imp3(primary_extended(s->left), primary_extended(s->right));
        break;
      case FormulaKind::iff:
        v = iff3(primary_extended(s->left), primary_extended(s->right));
        break;
      case FormulaKind::forall:
      case FormulaKind::exists:
        throw outside_closure(to_text(s));
      default:
        throw internal_invariant_violation("sugar atom reached the final semantics");
    }
    pcache_.emplace(s, v);
    return v;
  }

 private:
  const Theory* th_;
  const DepGraph* g_;
  PrimaryValuation primary_;
  mutable std::map<FormulaPtr, bool, FormulaLess> cache_;
  mutable std::map<FormulaPtr, truth3, FormulaLess> pcache_;

  std::optional<DomainElement> try_denote(const TermPtr& t) const {
    try {
      return denote(t, *th_);
    } catch (const non_sentence_neg_name&) {
      return std::nullopt;
    }
  }

  bool eval_core(const FormulaPtr& s) const {
    if (auto it = cache_.find(s); it != cache_.end()) return it->second;
    bool v;
    switch (s->kind) {
      case FormulaKind::pred_app:
      case FormulaKind::s_atom:
        v = base_atom_value(s, *th_);
        break;
      case FormulaKind::t_atom: {
        std::optional<DomainElement> e = try_denote(s->term);
        v = e && e->is_sentence() && primary_extended(e->sent()) == truth3::verum;
        break;
      }
      case FormulaKind::neg:
        v = !eval_core(s->left);
        break;
      case FormulaKind::conj:
        v = eval_core(s->left) && eval_core(s->right);
        break;
      case FormulaKind::disj:
        v = eval_core(s->left) || eval_core(s->right);
        break;
      case FormulaKind::impl:
        v = !eval_core(s->left) || eval_core(s->right);
        break;
      case FormulaKind::iff:
        v = eval_core(s->left) == eval_core(s->right);
        break;
      case FormulaKind::forall: {
        v = true;
        for (const auto& e : g_->range)
          if (!eval_core(substitute(s->left, s->name, element_name(e, *th_)))) {
            v = false;
            break;
          }
        break;
      }
      case FormulaKind::exists: {
        v = false;
        for (const auto& e : g_->range)
          if (eval_core(substitute(s->left, s->name, element_name(e, *th_)))) {
            v = true;
            break;
          }
        break;
      }
      default:
        throw internal_invariant_violation("sugar atom reached the final semantics");
    }
    cache_.emplace(s, v);
    return v;
  }
};

inline bool final_eval(const FormulaPtr& s, const FinalValuation& f, const Theory&) {
  return f.eval(s);
}

struct Verdict {
  std::optional<truth3> primary;  // nullopt: not computed (unregistered quantified)
  bool final_value = false;
};

// The two-layer reading of a sentence. Accepts surface sugar.
inline Verdict verdict(const FormulaPtr& s, const FinalValuation& f) {
  FormulaPtr core = expand_sugar(s);
  if (!is_sentence(core)) throw not_a_sentence(to_text(core));
  Verdict v;
  try {
    v.primary = f.primary_extended(core);
  } catch (const outside_closure&) {
    v.primary = std::nullopt;
  }
  v.final_value = f.eval(core);
  return v;
}

}  // namespace veritas
