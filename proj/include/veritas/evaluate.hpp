#pragma once

/// Hypotheses over the t_core and the strong Kleene evaluator / jump
/// operator. A hypothesis assigns a three-valued guess to every sentence the
/// truth predicate can reach; every other node's value is derived from it in
/// one sweep over the structural evaluation order.

#include <cstddef>
#include <string>
#include <vector>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/graph.hpp"
#include "veritas/theory.hpp"
#include "veritas/truth.hpp"

namespace veritas {

// Assignment over a graph's t_core, aligned with DepGraph::t_core. The
// default ordering (lexicographic with undetermined < false < true) is the
// canonical report and enumeration order.
struct Hypothesis {
  std::vector<truth3> values;

  static Hypothesis all_undetermined(std::size_t n) {
    return Hypothesis{std::vector<truth3>(n, truth3::undetermined)};
  }

  friend bool operator==(const Hypothesis& a, const Hypothesis& b) { return a.values == b.values; }
  friend bool operator<(const Hypothesis& a, const Hypothesis& b) { return a.values < b.values; }
};

// Pointwise information order.
inline bool info_leq(const Hypothesis& a, const Hypothesis& b) {
  if (a.values.size() != b.values.size())
    throw internal_invariant_violation("hypotheses over different cores");
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!info_leq(a.values[i], b.values[i])) return false;
  return true;
}

enum class Connective { neg, conj, disj, impl, iff };

// The strong Kleene tables behind one dispatching entry point; b is ignored
// for negation.
inline truth3 connective3(Connective op, truth3 a, truth3 b = truth3::undetermined) {
  switch (op) {
    case Connective::neg: return neg3(a);
    case Connective::conj: return and3(a, b);
    case Connective::disj: return or3(a, b);
    case Connective::impl: return imp3(a, b);
    case Connective::iff: return iff3(a, b);
  }
  throw internal_invariant_violation("unknown connective");
}

// Values of every node under hypothesis h, in node id order. Since the
// structural edges are acyclic and T-atoms read straight from h, a single
// pass in structural order suffices.
inline std::vector<truth3> evaluate_all(const Hypothesis& h, const DepGraph& g) {
  if (h.values.size() != g.t_core.size())
    throw internal_invariant_violation("hypothesis does not match the graph core");
  std::vector<truth3> v(g.size(), truth3::undetermined);
  for (int id : g.topo) {
    const auto& p = g.plan[id];
    switch (p.kind) {
      case FormulaKind::pred_app:
      case FormulaKind::s_atom:
        v[id] = p.base;
        break;
      case FormulaKind::t_atom:
        v[id] = p.deref_core >= 0 ? h.values[p.deref_core] : p.base;
        break;
      case FormulaKind::neg:
        v[id] = neg3(v[p.children[0]]);
        break;
      case FormulaKind::conj:
        v[id] = and3(v[p.children[0]], v[p.children[1]]);
        break;
      case FormulaKind::disj:
        v[id] = or3(v[p.children[0]], v[p.children[1]]);
        break;
      case FormulaKind::impl:
        v[id] = imp3(v[p.children[0]], v[p.children[1]]);
        break;
      case FormulaKind::iff:
        v[id] = iff3(v[p.children[0]], v[p.children[1]]);
        break;
      case FormulaKind::forall: {
        truth3 acc = truth3::verum;  // vacuously true on an empty range
        for (int c : p.children) acc = and3(acc, v[c]);
        v[id] = acc;
        break;
      }
      case FormulaKind::exists: {
        truth3 acc = truth3::falsum;
        for (int c : p.children) acc = or3(acc, v[c]);
        v[id] = acc;
        break;
      }
      default:
        throw internal_invariant_violation("sugar atom reached evaluation");
    }
  }
  return v;
}

// pre: s is a node of g.
inline truth3 kleene_eval(const FormulaPtr& s, const Hypothesis& h, const Theory&,
                          const DepGraph& g) {
  int id = g.id_of(s);
  if (id < 0) throw outside_closure(to_text(s));
  return evaluate_all(h, g)[id];
}

// One application of the jump operator: each core sentence gets the value
// the evaluator derives for it under h.
inline Hypothesis jump(const Hypothesis& h, const Theory&, const DepGraph& g) {
  std::vector<truth3> v = evaluate_all(h, g);
  Hypothesis out;
  out.values.reserve(g.t_core.size());
  for (int id : g.t_core) out.values.push_back(v[id]);
  return out;
}

}  // namespace veritas
