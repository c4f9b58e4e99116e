#pragma once

/// Fixed points of the jump operator: the least one, the full enumeration,
/// the intrinsic subset (fixed points that never classically conflict with
/// any other fixed point), and their join — the maximal intrinsic fixed
/// point, whose derived valuation over the whole closure is the primary
/// semantics.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/evaluate.hpp"
#include "veritas/graph.hpp"
#include "veritas/theory.hpp"
#include "veritas/truth.hpp"

namespace veritas {

constexpr std::size_t kDefaultHypothesisBudget = 4782969;  // 3^14

// Three-valued valuation of every closure sentence, canonical node order.
struct PrimaryValuation {
  std::vector<FormulaPtr> sentences;  // sorted structurally (= graph nodes)
  std::vector<truth3> values;

  std::optional<truth3> value_of(const FormulaPtr& s) const {
    auto it = std::lower_bound(sentences.begin(), sentences.end(), s, FormulaLess{});
    if (it == sentences.end() || !equal(*it, s)) return std::nullopt;
    return values[static_cast<std::size_t>(it - sentences.begin())];
  }

  // DD: the sentences with a classical primary value.
  std::vector<FormulaPtr> determination_domain() const {
    std::vector<FormulaPtr> out;
    for (std::size_t i = 0; i < sentences.size(); ++i)
      if (is_classical(values[i])) out.push_back(sentences[i]);
    return out;
  }
};

// The classical partial function: the primary valuation restricted to its
// determination domain.
struct ClassicalPartial {
  std::vector<FormulaPtr> sentences;
  std::vector<bool> values;

  std::optional<bool> value_of(const FormulaPtr& s) const {
    auto it = std::lower_bound(sentences.begin(), sentences.end(), s, FormulaLess{});
    if (it == sentences.end() || !equal(*it, s)) return std::nullopt;
    return values[static_cast<std::size_t>(it - sentences.begin())];
  }
};

struct FixpointReport {
  Hypothesis least;
  std::vector<Hypothesis> all_fixed;  // ascending canonical order
  std::vector<Hypothesis> intrinsic;  // subsequence of all_fixed
  Hypothesis maximal_intrinsic;
  PrimaryValuation primary;
};

// Iterates the jump from the all-undetermined hypothesis; the ascent is
// checked and must stabilize within 2*|t_core| + 2 rounds.
inline Hypothesis least_fixed_point(const Theory& th, const DepGraph& g) {
  Hypothesis h = Hypothesis::all_undetermined(g.t_core.size());
  const std::size_t limit = 2 * g.t_core.size() + 2;
  for (std::size_t round = 0; round < limit; ++round) {
    Hypothesis next = jump(h, th, g);
    if (!info_leq(h, next))
      throw internal_invariant_violation("jump iteration is not ascending");
    if (next == h) return h;
    h = std::move(next);
  }
  throw internal_invariant_violation("least fixed point iteration failed to stabilize");
}

namespace detail {

inline std::size_t hypothesis_count(std::size_t core, std::size_t budget) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < core; ++i) {
    count *= 3;
    if (count > budget) throw enumeration_budget_exceeded(core, budget);
  }
  return static_cast<std::size_t>(count);
}

// Odometer step in canonical order: the last position is least significant,
// value order undetermined < false < true.
inline bool next_hypothesis(Hypothesis& h) {
  for (std::size_t i = h.values.size(); i-- > 0;) {
    if (h.values[i] != truth3::verum) {
      h.values[i] = static_cast<truth3>(static_cast<unsigned char>(h.values[i]) + 1);
      return true;
    }
    h.values[i] = truth3::undetermined;
  }
  return false;
}

}  // namespace detail

// All fixed points of the jump, in ascending canonical order, by exhaustive
// search over 3^|t_core| hypotheses.
inline std::vector<Hypothesis> enumerate_fixed_points(const Theory&, const DepGraph& g,
                                                      std::size_t budget = kDefaultHypothesisBudget) {
  detail::hypothesis_count(g.t_core.size(), budget);
  std::vector<Hypothesis> fixed;
  Hypothesis h = Hypothesis::all_undetermined(g.t_core.size());
  std::vector<truth3> v;
  do {
    v.assign(g.size(), truth3::undetermined);
    bool is_fixed = true;
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
          truth3 acc = truth3::verum;
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
    for (std::size_t i = 0; i < g.t_core.size(); ++i)
      if (v[g.t_core[i]] != h.values[i]) {
        is_fixed = false;
        break;
      }
    if (is_fixed) fixed.push_back(h);
  } while (detail::next_hypothesis(h));
  return fixed;
}

// True when h never classically conflicts with any fixed point: no sentence
// is true in one and false in the other.
inline bool is_intrinsic(const Hypothesis& h, const std::vector<Hypothesis>& all_fixed) {
  for (const auto& g : all_fixed)
    for (std::size_t i = 0; i < h.values.size(); ++i) {
      truth3 a = h.values[i], b = g.values[i];
      if ((a == truth3::verum && b == truth3::falsum) ||
          (a == truth3::falsum && b == truth3::verum))
        return false;
    }
  return true;
}

namespace detail {

// Equivalent to filtering with is_intrinsic but linear in |all_fixed|: a
// fixed point conflicts with some fixed point iff it is true somewhere a
// false value occurs at all, or false somewhere a true value occurs.
inline std::vector<std::size_t> intrinsic_indices(const std::vector<Hypothesis>& all_fixed,
                                                  std::size_t core) {
  std::vector<bool> saw_top(core, false), saw_bot(core, false);
  for (const auto& h : all_fixed)
    for (std::size_t i = 0; i < core; ++i) {
      if (h.values[i] == truth3::verum) saw_top[i] = true;
      else if (h.values[i] == truth3::falsum) saw_bot[i] = true;
    }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < all_fixed.size(); ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < core && ok; ++i) {
      truth3 a = all_fixed[k].values[i];
      if ((a == truth3::verum && saw_bot[i]) || (a == truth3::falsum && saw_top[i])) ok = false;
    }
    if (ok) out.push_back(k);
  }
  return out;
}

}  // namespace detail

// The full fixed-point analysis. The maximal intrinsic point is computed as
// the information join of all intrinsic fixed points; the join is then
// verified to be a fixed point itself, present in the enumeration, and an
// upper bound of the least fixed point. Each of these is a theorem at finite
// scale, so a failure signals an implementation bug.
inline FixpointReport maximal_intrinsic(const Theory& th, const DepGraph& g,
                                        std::size_t budget = kDefaultHypothesisBudget) {
  FixpointReport r;
  r.least = least_fixed_point(th, g);
  r.all_fixed = enumerate_fixed_points(th, g, budget);

  const std::size_t core = g.t_core.size();
  std::vector<std::size_t> keep = detail::intrinsic_indices(r.all_fixed, core);
  r.intrinsic.reserve(keep.size());
  for (std::size_t k : keep) r.intrinsic.push_back(r.all_fixed[k]);

  if (!std::binary_search(r.all_fixed.begin(), r.all_fixed.end(), r.least))
    throw internal_invariant_violation("least fixed point missing from enumeration");
  if (!is_intrinsic(r.least, r.all_fixed))
    throw internal_invariant_violation("least fixed point is not intrinsic");

  Hypothesis join = Hypothesis::all_undetermined(core);
  for (const auto& h : r.intrinsic)
    for (std::size_t i = 0; i < core; ++i) join.values[i] = info_join(join.values[i], h.values[i]);

  if (!(jump(join, th, g) == join))
    throw internal_invariant_violation("intrinsic join is not a fixed point");
  if (!std::binary_search(r.all_fixed.begin(), r.all_fixed.end(), join))
    throw internal_invariant_violation("intrinsic join missing from enumeration");
  if (!is_intrinsic(join, r.all_fixed))
    throw internal_invariant_violation("intrinsic join is not intrinsic");
  for (const auto& h : r.intrinsic)
    if (!info_leq(h, join))
      throw internal_invariant_violation("intrinsic point above the join");
  if (!info_leq(r.least, join))
    throw internal_invariant_violation("least fixed point above the maximal intrinsic point");

  r.maximal_intrinsic = join;
  r.primary.sentences = g.nodes;
  r.primary.values = evaluate_all(join, g);
  for (std::size_t id = 0; id < g.size(); ++id) {
    const auto& p = g.plan[id];
    if (p.kind == FormulaKind::t_atom && p.deref >= 0 &&
        r.primary.values[id] != r.primary.values[p.deref])
      throw internal_invariant_violation("fixed point condition fails on the closure");
  }
  return r;
}

inline ClassicalPartial classical_restriction(const PrimaryValuation& p) {
  ClassicalPartial c;
  for (std::size_t i = 0; i < p.sentences.size(); ++i)
    if (is_classical(p.values[i])) {
      c.sentences.push_back(p.sentences[i]);
      c.values.push_back(to_bool(p.values[i]));
    }
  return c;
}

}  // namespace veritas
