#pragma once

/// The semantic dependency graph: a finite sentence closure with dependency
/// edges, the t_core (sentences referenced by truth atoms), the quantifier
/// range, and a precomputed evaluation plan.
///
/// Closure construction runs in two phases. Phase one collects the
/// "registered" sentences: seeds and all constant bindings, closed under
/// immediate subsentences and T-dereference (no quantifier instantiation).
/// The quantifier range is then frozen as base domain elements plus the
/// registered sentences, and phase two closes the node set under quantifier
/// instantiation over that fixed range (plus subsentences and T-dereference
/// of anything new). Freezing the range keeps construction terminating —
/// instances are nodes but do not themselves enlarge the range — and is the
/// finite approximation of quantifying over the full sentence language.
///
/// Edges point from a sentence to the sentences its value depends on.
/// Removing the T-dereference edges leaves an acyclic graph: structural
/// edges strictly decrease the unquoted complexity of sentences, so every
/// cycle passes through a truth atom.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory.hpp"
#include "veritas/truth.hpp"

namespace veritas {

constexpr std::size_t kDefaultNodeCap = 20000;

namespace detail {
// Per-node evaluation recipe, valid for any hypothesis over the t_core.
struct NodePlan {
  FormulaKind kind = FormulaKind::pred_app;
  truth3 base = truth3::falsum;  // leaf value (base atoms, non-denoting T-atoms)
  int deref = -1;                // t_atom: node id of the dereferenced sentence
  int deref_core = -1;           // t_atom: position of deref in t_core
  std::vector<int> children;     // neg: 1, binary: 2, quantifier: instances
};
class ClosureBuilder;
}  // namespace detail

class DepGraph {
 public:
  std::vector<FormulaPtr> nodes;                   // canonical (structural) order
  std::vector<std::vector<int>> edges;             // all dependency edges
  std::vector<int> t_core;                         // ascending node ids
  std::vector<int> core_pos;                       // node id -> t_core position or -1
  std::vector<DomainElement> range;                // quantifier range
  std::vector<detail::NodePlan> plan;
  std::vector<int> topo;                           // structural order, children first

  std::size_t size() const { return nodes.size(); }

  int id_of(const FormulaPtr& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const FormulaPtr& s) const { return id_of(s) >= 0; }

  friend class detail::ClosureBuilder;

 private:
  std::map<FormulaPtr, int, FormulaLess> index_;
};

namespace detail {

class ClosureBuilder {
 public:
  ClosureBuilder(const Theory& th, std::size_t cap) : th_(th), cap_(cap) {}

  DepGraph build(const std::vector<FormulaPtr>& seeds) {
    for (const auto& name : th_.binding_order) enqueue(th_.constant_bindings.at(name));
    for (const auto& s : seeds) {
      FormulaPtr core = expand_sugar(s);
      if (!is_sentence(core)) throw not_a_sentence(to_text(core));
      enqueue(core);
    }
    drain();
    freeze_range();
    // Instantiate every quantified node discovered so far, then keep closing;
    // new quantified nodes may appear inside instances and dereferences.
    std::size_t done = 0;
    while (true) {
      drain();
      if (done == quantified_.size()) break;
      instantiate(quantified_[done++]);
    }
    return assemble();
  }

 private:
  const Theory& th_;
  std::size_t cap_;
  std::map<FormulaPtr, int, FormulaLess> seen_;
  std::vector<FormulaPtr> order_;
  std::deque<FormulaPtr> pending_;
  std::vector<FormulaPtr> quantified_;
  std::vector<DomainElement> range_;
  std::vector<TermPtr> range_names_;

  void enqueue(const FormulaPtr& f) {
    if (seen_.count(f)) return;
    if (order_.size() >= cap_) throw closure_budget_exceeded(cap_);
    seen_.emplace(f, static_cast<int>(order_.size()));
    order_.push_back(f);
    pending_.push_back(f);
  }

  void drain() {
    while (!pending_.empty()) {
      FormulaPtr f = pending_.front();
      pending_.pop_front();
      visit(f);
    }
  }

  void visit(const FormulaPtr& f) {
    switch (f->kind) {
      case FormulaKind::pred_app:
      case FormulaKind::s_atom:
        break;
      case FormulaKind::t_atom: {
        DomainElement e;
        try {
          e = denote(f->term, th_);
        } catch (const non_sentence_neg_name&) {
          break;  // names nothing: a false leaf
        }
        if (e.is_sentence()) enqueue(e.sent());
        break;
      }
      case FormulaKind::neg:
        enqueue(f->left);
        break;
      case FormulaKind::conj:
      case FormulaKind::disj:
      case FormulaKind::impl:
      case FormulaKind::iff:
        enqueue(f->left);
        enqueue(f->right);
        break;
      case FormulaKind::forall:
      case FormulaKind::exists:
        quantified_.push_back(f);  // instantiated by the builder's outer loop
        break;
      default:
        throw internal_invariant_violation("sugar atom reached the closure");
    }
  }

  void freeze_range() {
    for (const auto& e : th_.base_domain) range_.push_back(DomainElement::base(e));
    std::vector<FormulaPtr> registered = order_;
    std::sort(registered.begin(), registered.end(), FormulaLess{});
    for (const auto& s : registered) range_.push_back(DomainElement::sentence(s));
  }

  void instantiate(const FormulaPtr& q) {
    if (range_names_.empty()) {
      range_names_.reserve(range_.size());
      for (const auto& e : range_) range_names_.push_back(element_name(e, th_));
    }
    for (const auto& name : range_names_) enqueue(substitute(q->left, q->name, name));
  }

  DepGraph assemble() {
    DepGraph g;
    g.nodes = order_;
    std::sort(g.nodes.begin(), g.nodes.end(), FormulaLess{});
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      g.index_.emplace(g.nodes[i], static_cast<int>(i));
    g.range = range_;

    const int n = static_cast<int>(g.nodes.size());
    g.plan.resize(n);
    g.edges.resize(n);
    std::set<int> core_ids;

    std::vector<TermPtr> names;
    auto range_name = [&](std::size_t i) {
      if (names.empty()) {
        names.reserve(g.range.size());
        for (const auto& e : g.range) names.push_back(element_name(e, th_));
      }
      return names[i];
    };

    for (int id = 0; id < n; ++id) {
      const FormulaPtr& f = g.nodes[id];
      NodePlan& p = g.plan[id];
      p.kind = f->kind;
      switch (f->kind) {
        case FormulaKind::pred_app:
        case FormulaKind::s_atom:
          p.base = from_bool(base_atom_value(f, th_));
          break;
        case FormulaKind::t_atom: {
          DomainElement e;
          bool denotes = true;
          try {
            e = denote(f->term, th_);
          } catch (const non_sentence_neg_name&) {
            denotes = false;
          }
          if (denotes && e.is_sentence()) {
            p.deref = g.id_of(e.sent());
            if (p.deref < 0)
              throw internal_invariant_violation("dereference target missing from closure");
            core_ids.insert(p.deref);
            g.edges[id].push_back(p.deref);
          } else {
            p.base = truth3::falsum;  // truth of a non-sentence
          }
          break;
        }
        case FormulaKind::neg:
          p.children.push_back(require(g, f->left));
          g.edges[id] = p.children;
          break;
        case FormulaKind::conj:
        case FormulaKind::disj:
        case FormulaKind::impl:
        case FormulaKind::iff:
          p.children.push_back(require(g, f->left));
          p.children.push_back(require(g, f->right));
          g.edges[id] = p.children;
          break;
        case FormulaKind::forall:
        case FormulaKind::exists: {
          std::set<int> inst;
          for (std::size_t i = 0; i < g.range.size(); ++i)
            inst.insert(require(g, substitute(f->left, f->name, range_name(i))));
          p.children.assign(inst.begin(), inst.end());
          g.edges[id] = p.children;
          break;
        }
        default:
          throw internal_invariant_violation("sugar atom reached the closure");
      }
    }

    g.t_core.assign(core_ids.begin(), core_ids.end());
    g.core_pos.assign(n, -1);
    for (std::size_t i = 0; i < g.t_core.size(); ++i) g.core_pos[g.t_core[i]] = static_cast<int>(i);
    for (int id = 0; id < n; ++id)
      if (g.plan[id].deref >= 0) g.plan[id].deref_core = g.core_pos[g.plan[id].deref];

    g.topo = structural_topo(g);
    return g;
  }

  static int require(const DepGraph& g, const FormulaPtr& f) {
    int id = g.id_of(f);
    if (id < 0) throw internal_invariant_violation("closure is not closed under subsentences");
    return id;
  }

  // Children-first order over structural edges (T-dereferences excluded);
  // their absence of cycles is what makes evaluation a single sweep.
  static std::vector<int> structural_topo(const DepGraph& g) {
    const int n = static_cast<int>(g.nodes.size());
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> parents(n);
    for (int id = 0; id < n; ++id) {
      if (g.plan[id].kind == FormulaKind::t_atom) continue;
      for (int c : g.plan[id].children) {
        ++deg[id];
        parents[c].push_back(id);
      }
    }
    std::set<int> ready;
    for (int id = 0; id < n; ++id)
      if (deg[id] == 0) ready.insert(id);
    std::vector<int> topo;
    topo.reserve(n);
    while (!ready.empty()) {
      int id = *ready.begin();
      ready.erase(ready.begin());
      topo.push_back(id);
      for (int p : parents[id])
        if (--deg[p] == 0) ready.insert(p);
    }
    if (static_cast<int>(topo.size()) != n)
      throw internal_invariant_violation("structural dependency cycle");
    return topo;
  }
};

}  // namespace detail

// Builds the dependency graph for the given seed sentences plus all constant
// bindings of the theory. Seeds may use surface sugar; they are expanded.
inline DepGraph closure(const std::vector<FormulaPtr>& seeds, const Theory& th,
                        std::size_t cap = kDefaultNodeCap) {
  return detail::ClosureBuilder(th, cap).build(seeds);
}

// Strongly connected components of the full edge relation, in reverse
// topological order of the condensation (components before their dependents).
inline std::vector<std::vector<int>> sccs(const DepGraph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> idx(n, -1), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::vector<int>> out;
  int counter = 0;

  // Iterative Tarjan; frames carry the next edge position to resume at.
  struct Frame { int node; std::size_t edge; };
  for (int root = 0; root < n; ++root) {
    if (idx[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    while (!frames.empty()) {
      Frame& fr = frames.back();
      int v = fr.node;
      if (fr.edge == 0) {
        idx[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (fr.edge < g.edges[v].size()) {
        int w = g.edges[v][fr.edge++];
        if (idx[w] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], idx[w]);
      }
      if (descended) continue;
      if (low[v] == idx[v]) {
        std::vector<int> comp;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
          if (w == v) break;
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return out;
}

// The finite-range restriction statement carried in every report.
inline const char* range_restriction_note() {
  return "quantifier range restricted to the declared domain plus registered "
         "sentences; quantification over the full sentence language is not modeled";
}

// Graphviz DOT rendering. When values are supplied (one per node), nodes are
// colored by value: true green, false red, undetermined gray.
inline std::string export_dot(const DepGraph& g, const std::vector<truth3>* values = nullptr) {
  std::string out = "digraph closure {\n";
  out += "  // ";
  out += range_restriction_note();
  out += "\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  auto escape = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '"' || c == '\\') r += '\\';
      r += c;
    }
    return r;
  };
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + escape(to_text(g.nodes[i])) + "\"";
    if (values && i < values->size()) {
      const char* color = (*values)[i] == truth3::verum   ? "green"
                          : (*values)[i] == truth3::falsum ? "red"
                                                           : "gray";
      out += ", style=filled, fillcolor=";
      out += color;
    }
    out += "];\n";
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (int j : g.edges[i])
      out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace veritas
