#pragma once

/// The catalog of schemas that are true in the final semantics, checked
/// mechanically: per schema, every admissible instance over the closure is
/// built as an object-language sentence and handed to the final evaluator.
/// An instance evaluating to false is recorded as a failure.
///
/// Binary-connective table schemas range over ordered pairs of closure
/// sentences; quantifier table schemas over the quantified closure
/// sentences; description schemas over the declared sentence constants;
/// the non-sentence schema over the base domain. Everything else ranges
/// over single closure sentences.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/final.hpp"
#include "veritas/graph.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory.hpp"

namespace veritas {

enum class LawFamily {
  consistency,
  table,
  iteration,
  grounding,
  description,
  nonsentence,
  baseatom,
};

enum class InstanceDomain {
  closure_sentence,
  closure_pair,
  closure_forall,
  closure_exists,
  closure_base_atomic,  // atomic closure sentences not headed by T
  sentence_constant,
  base_element,
};

struct LawSchema {
  std::string name;
  LawFamily family;
  InstanceDomain domain;
  // a/b used by the closure-sentence domains, symbol by the named domains.
  std::function<FormulaPtr(const Theory& th, const FormulaPtr& a, const FormulaPtr& b,
                           const std::string& symbol)>
      build;
};

struct LawReport {
  std::string name;
  std::size_t instances = 0;
  std::vector<std::string> failures;  // pretty-printed failing instances

  bool passed() const { return failures.empty(); }
};

namespace detail {

inline TermPtr q(const FormulaPtr& f) { return mk_quote(f); }
inline FormulaPtr Tq(const FormulaPtr& f) { return mk_t(q(f)); }
inline FormulaPtr Fq(const FormulaPtr& f) { return mk_f(q(f)); }
inline FormulaPtr Uq(const FormulaPtr& f) { return mk_u(q(f)); }

inline std::vector<LawSchema> make_builtin_schemas() {
  std::vector<LawSchema> out;
  auto add = [&](std::string name, LawFamily fam, InstanceDomain dom, auto fn) {
    out.push_back({std::move(name), fam, dom,
                   [fn](const Theory& th, const FormulaPtr& a, const FormulaPtr& b,
                        const std::string& sym) { return fn(th, a, b, sym); }});
  };
  auto unary = [&](std::string name, LawFamily fam, FormulaPtr (*fn)(const FormulaPtr&)) {
    add(std::move(name), fam, InstanceDomain::closure_sentence,
        [fn](const Theory&, const FormulaPtr& a, const FormulaPtr&, const std::string&) {
          return fn(a);
        });
  };
  auto pair = [&](std::string name, FormulaPtr (*fn)(const FormulaPtr&, const FormulaPtr&)) {
    add(std::move(name), LawFamily::table, InstanceDomain::closure_pair,
        [fn](const Theory&, const FormulaPtr& a, const FormulaPtr& b, const std::string&) {
          return fn(a, b);
        });
  };
  auto quant = [&](std::string name, InstanceDomain dom, FormulaPtr (*fn)(const FormulaPtr&)) {
    add(std::move(name), LawFamily::table, dom,
        [fn](const Theory&, const FormulaPtr& a, const FormulaPtr&, const std::string&) {
          return fn(a);
        });
  };

  unary("consistency", LawFamily::consistency,
        +[](const FormulaPtr& a) { return mk_not(mk_and(Tq(a), Fq(a))); });

  // Truth-table descriptions: negation.
  unary("table.neg.t", LawFamily::table,
        +[](const FormulaPtr& a) { return mk_iff(Tq(mk_not(a)), Fq(a)); });
  unary("table.neg.f", LawFamily::table,
        +[](const FormulaPtr& a) { return mk_iff(Fq(mk_not(a)), Tq(a)); });
  unary("table.neg.u", LawFamily::table,
        +[](const FormulaPtr& a) { return mk_iff(Uq(mk_not(a)), Uq(a)); });

  // Conjunction.
  pair("table.conj.t", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Tq(mk_and(a, b)), mk_and(Tq(a), Tq(b)));
  });
  pair("table.conj.f", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Fq(mk_and(a, b)), mk_or(Fq(a), Fq(b)));
  });
  pair("table.conj.u", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Uq(mk_and(a, b)),
                  mk_or(mk_or(mk_and(Tq(a), Uq(b)), mk_and(Uq(a), Tq(b))),
                        mk_and(Uq(a), Uq(b))));
  });

  // Disjunction.
  pair("table.disj.t", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Tq(mk_or(a, b)), mk_or(Tq(a), Tq(b)));
  });
  pair("table.disj.f", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Fq(mk_or(a, b)), mk_and(Fq(a), Fq(b)));
  });
  pair("table.disj.u", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Uq(mk_or(a, b)),
                  mk_or(mk_or(mk_and(Fq(a), Uq(b)), mk_and(Uq(a), Fq(b))),
                        mk_and(Uq(a), Uq(b))));
  });

  // Conditional.
  pair("table.impl.t", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Tq(mk_imp(a, b)), mk_or(Fq(a), Tq(b)));
  });
  pair("table.impl.f", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Fq(mk_imp(a, b)), mk_and(Tq(a), Fq(b)));
  });
  pair("table.impl.u", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Uq(mk_imp(a, b)),
                  mk_or(mk_or(mk_and(Tq(a), Uq(b)), mk_and(Uq(a), Fq(b))),
                        mk_and(Uq(a), Uq(b))));
  });

  // Biconditional.
  pair("table.iff.t", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Tq(mk_iff(a, b)), mk_or(mk_and(Tq(a), Tq(b)), mk_and(Fq(a), Fq(b))));
  });
  pair("table.iff.f", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Fq(mk_iff(a, b)), mk_or(mk_and(Tq(a), Fq(b)), mk_and(Fq(a), Tq(b))));
  });
  pair("table.iff.u", +[](const FormulaPtr& a, const FormulaPtr& b) {
    return mk_iff(Uq(mk_iff(a, b)), mk_or(Uq(a), Uq(b)));
  });

  // Universal quantification: a is a closure sentence of the form forall x. body.
  quant("table.forall.t", InstanceDomain::closure_forall, +[](const FormulaPtr& a) {
    return mk_iff(Tq(a), mk_forall(a->name, Tq(a->left)));
  });
  quant("table.forall.f", InstanceDomain::closure_forall, +[](const FormulaPtr& a) {
    return mk_iff(Fq(a), mk_exists(a->name, Fq(a->left)));
  });
  quant("table.forall.u", InstanceDomain::closure_forall, +[](const FormulaPtr& a) {
    return mk_iff(Uq(a), mk_and(mk_not(mk_exists(a->name, Fq(a->left))),
                                mk_exists(a->name, Uq(a->left))));
  });

  // Existential quantification.
  quant("table.exists.t", InstanceDomain::closure_exists, +[](const FormulaPtr& a) {
    return mk_iff(Tq(a), mk_exists(a->name, Tq(a->left)));
  });
  quant("table.exists.f", InstanceDomain::closure_exists, +[](const FormulaPtr& a) {
    return mk_iff(Fq(a), mk_forall(a->name, Fq(a->left)));
  });
  quant("table.exists.u", InstanceDomain::closure_exists, +[](const FormulaPtr& a) {
    return mk_iff(Uq(a), mk_and(mk_not(mk_exists(a->name, Tq(a->left))),
                                mk_exists(a->name, Uq(a->left))));
  });

  // Iteration of the truth predicate.
  unary("iter.tt", LawFamily::iteration,
        +[](const FormulaPtr& a) { return mk_iff(Tq(Tq(a)), Tq(a)); });
  unary("iter.ft", LawFamily::iteration,
        +[](const FormulaPtr& a) { return mk_iff(Fq(Tq(a)), Fq(a)); });
  unary("iter.tf", LawFamily::iteration,
        +[](const FormulaPtr& a) { return mk_iff(Tq(Fq(a)), Fq(a)); });
  unary("iter.ff", LawFamily::iteration,
        +[](const FormulaPtr& a) { return mk_iff(Fq(Fq(a)), Tq(a)); });
  unary("iter.ut", LawFamily::iteration,
        +[](const FormulaPtr& a) { return mk_iff(Uq(Tq(a)), Uq(a)); });

  // Grounding: primary truth/falsity transfer to the final semantics.
  unary("ground.t", LawFamily::grounding,
        +[](const FormulaPtr& a) { return mk_imp(Tq(a), a); });
  unary("ground.f", LawFamily::grounding,
        +[](const FormulaPtr& a) { return mk_imp(Fq(a), mk_not(a)); });
  unary("determinate.converse", LawFamily::grounding, +[](const FormulaPtr& a) {
    return mk_imp(mk_d(q(a)), mk_and(mk_iff(Tq(a), a), mk_iff(Fq(a), mk_not(a))));
  });

  // A name of a non-sentence is neither true nor false.
  add("nonsentence", LawFamily::nonsentence, InstanceDomain::base_element,
      [](const Theory& th, const FormulaPtr&, const FormulaPtr&, const std::string& el) {
        TermPtr name = element_name(DomainElement::base(el), th);
        return mk_and(mk_not(mk_t(name)), mk_not(mk_f(name)));
      });

  // Base atoms: quotation of a T-free atomic sentence is transparent.
  add("base_atom.t", LawFamily::baseatom, InstanceDomain::closure_base_atomic,
      [](const Theory&, const FormulaPtr& a, const FormulaPtr&, const std::string&) {
        return mk_iff(Tq(a), a);
      });
  add("base_atom.f", LawFamily::baseatom, InstanceDomain::closure_base_atomic,
      [](const Theory&, const FormulaPtr& a, const FormulaPtr&, const std::string&) {
        return mk_iff(Fq(a), mk_not(a));
      });

  // Descriptions of sentence constants: T(C) -> d(C), F(C) -> ~d(C).
  add("description.t", LawFamily::description, InstanceDomain::sentence_constant,
      [](const Theory& th, const FormulaPtr&, const FormulaPtr&, const std::string& c) {
        return mk_imp(mk_t(mk_sent_const(c)), th.constant_bindings.at(c));
      });
  add("description.f", LawFamily::description, InstanceDomain::sentence_constant,
      [](const Theory& th, const FormulaPtr&, const FormulaPtr&, const std::string& c) {
        return mk_imp(mk_f(mk_sent_const(c)), mk_not(th.constant_bindings.at(c)));
      });

  return out;
}

}  // namespace detail

inline const std::vector<LawSchema>& builtin_schemas() {
  static const std::vector<LawSchema> schemas = detail::make_builtin_schemas();
  return schemas;
}

// Fix the base-atomic domain: atomic closure sentences not headed by T.
namespace detail {
inline bool base_atomic(const FormulaPtr& f) {
  return f->kind == FormulaKind::pred_app || f->kind == FormulaKind::s_atom;
}
}  // namespace detail

inline LawReport check_schema(const LawSchema& schema, const FinalValuation& f,
                              const Theory& th, const DepGraph& g) {
  LawReport report;
  report.name = schema.name;
  auto run = [&](const FormulaPtr& a, const FormulaPtr& b, const std::string& sym) {
    FormulaPtr instance = expand_sugar(schema.build(th, a, b, sym));
    ++report.instances;
    if (!f.eval(instance)) report.failures.push_back(to_text(instance));
  };
  switch (schema.domain) {
    case InstanceDomain::closure_sentence:
      for (const auto& s : g.nodes) run(s, nullptr, "");
      break;
    case InstanceDomain::closure_pair:
      for (const auto& a : g.nodes)
        for (const auto& b : g.nodes) run(a, b, "");
      break;
    case InstanceDomain::closure_forall:
      for (const auto& s : g.nodes)
        if (s->kind == FormulaKind::forall) run(s, nullptr, "");
      break;
    case InstanceDomain::closure_exists:
      for (const auto& s : g.nodes)
        if (s->kind == FormulaKind::exists) run(s, nullptr, "");
      break;
    case InstanceDomain::closure_base_atomic:
      for (const auto& s : g.nodes)
        if (detail::base_atomic(s)) run(s, nullptr, "");
      break;
    case InstanceDomain::sentence_constant:
      for (const auto& name : th.binding_order) run(nullptr, nullptr, name);
      break;
    case InstanceDomain::base_element:
      for (const auto& el : th.base_domain) run(nullptr, nullptr, el);
      break;
  }
  return report;
}

inline std::vector<LawReport> check_all(const FinalValuation& f, const Theory& th,
                                        const DepGraph& g) {
  std::vector<LawReport> out;
  out.reserve(builtin_schemas().size());
  for (const auto& schema : builtin_schemas()) out.push_back(check_schema(schema, f, th, g));
  return out;
}

// Diagnostic only: whether final truth/falsity/undeterminedness transfers
// between two specific closure sentences. Not part of the built-in suite —
// classically equivalent sentences need not satisfy it.
inline LawReport check_equivalence_transfer(const FormulaPtr& s1, const FormulaPtr& s2,
                                            const FinalValuation& f, const Theory&,
                                            const DepGraph& g) {
  FormulaPtr a = expand_sugar(s1), b = expand_sugar(s2);
  if (!g.contains(a)) throw outside_closure(to_text(a));
  if (!g.contains(b)) throw outside_closure(to_text(b));
  LawReport report;
  report.name = "equivalence.transfer";
  for (FormulaPtr inst :
       {mk_iff(detail::Tq(a), detail::Tq(b)), mk_iff(detail::Fq(a), detail::Fq(b)),
        mk_iff(detail::Uq(a), detail::Uq(b))}) {
    FormulaPtr core = expand_sugar(inst);
    ++report.instances;
    if (!f.eval(core)) report.failures.push_back(to_text(core));
  }
  return report;
}

}  // namespace veritas
