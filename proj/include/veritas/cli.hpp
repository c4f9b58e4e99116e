#pragma once

/// Command-line front end. Subcommands:
///
///   eval THEORY -s SENTENCE...   two-layer verdicts for the given sentences
///   fixpoints THEORY             fixed-point census and listing
///   laws THEORY                  run the built-in law suite
///   graph THEORY                 DOT export of the dependency graph
///
/// Exit codes: 0 success, 1 law failure, 2 budget exceeded, 3 input error.

#include <chrono>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/evaluate.hpp"
#include "veritas/final.hpp"
#include "veritas/fixpoint.hpp"
#include "veritas/graph.hpp"
#include "veritas/laws.hpp"
#include "veritas/parser.hpp"
#include "veritas/printer.hpp"
#include "veritas/report.hpp"
#include "veritas/theory.hpp"
#include "veritas/theory_file.hpp"
#include "veritas/truth.hpp"

namespace veritas {

namespace detail {

inline RunReport base_report(const std::string& command, const std::string& theory) {
  RunReport r;
  r.command = command;
  r.theory = theory;
  r.note = range_restriction_note();
  return r;
}

inline void fill_census(RunReport& r, const DepGraph& g, const FixpointReport& fp) {
  r.census.nodes = g.size();
  r.census.core = g.t_core.size();
  r.census.fixed_points = fp.all_fixed.size();
  r.census.intrinsic = fp.intrinsic.size();
  r.census.complete = true;
}

inline void fill_census_incomplete(RunReport& r, const DepGraph& g) {
  r.census.nodes = g.size();
  r.census.core = g.t_core.size();
  r.census.complete = false;
  r.complete = false;
}

inline std::string core_values(const Hypothesis& h) {
  std::string s;
  s.reserve(h.values.size());
  for (truth3 v : h.values) s += to_char(v);
  return s;
}

inline void emit(const RunReport& r, bool json, std::ostream& out) {
  out << (json ? report_to_json(r) : report_to_text(r));
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"two-layer semantics for a language with a self-referential truth predicate"};
  app.name("veritas");
  app.require_subcommand(1);

  std::string theory_path;
  std::vector<std::string> sentences;
  std::size_t budget = kDefaultHypothesisBudget;
  std::size_t closure_cap = kDefaultNodeCap;
  std::size_t list_limit = 1000;
  std::string out_path;
  bool json = false, auto_extend = false, seed_closure = false, color = false, dot = true;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("theory", theory_path, "theory file")->required();
    sub->add_option("--budget", budget, "hypothesis budget for fixed point enumeration");
    sub->add_option("--closure-cap", closure_cap, "node cap for the sentence closure");
    sub->add_flag("--json", json, "machine-readable report");
  };

  CLI::App* eval = app.add_subcommand("eval", "two-layer verdicts for sentences");
  add_common(eval);
  eval->add_option("-s,--sentence", sentences, "sentence to evaluate (repeatable)")->required();
  eval->add_flag("--auto-extend", auto_extend,
                 "re-seed the closure with the queries if a dereference leaves it");
  eval->add_flag("--seed-closure", seed_closure, "include the queries as closure seeds upfront");

  CLI::App* fixpoints = app.add_subcommand("fixpoints", "fixed point census and listing");
  add_common(fixpoints);
  fixpoints->add_option("--limit", list_limit, "maximum fixed points to list");

  CLI::App* laws = app.add_subcommand("laws", "check the built-in law schemas");
  add_common(laws);

  CLI::App* graph = app.add_subcommand("graph", "DOT export of the dependency graph");
  add_common(graph);
  graph->add_option("-s,--sentence", sentences, "extra seed sentence (repeatable)");
  graph->add_flag("--dot", dot, "emit Graphviz DOT (the default)");
  graph->add_flag("--color", color, "color nodes by primary value");
  graph->add_option("--out", out_path, "write output to a file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("veritas");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 3;
  }

  detail::Timer timer;
  try {
    Theory th = load_theory(theory_path);

    if (eval->parsed()) {
      std::vector<FormulaPtr> surface, queries;
      for (const auto& text : sentences) {
        FormulaPtr s = parse_sentence(text, th.signature);
        surface.push_back(s);
        queries.push_back(expand_sugar(s));
      }
      bool seeded = seed_closure;
      while (true) {
        DepGraph g = closure(seeded ? queries : std::vector<FormulaPtr>{}, th, closure_cap);
        RunReport report = detail::base_report("eval", theory_path);
        try {
          FixpointReport fp = maximal_intrinsic(th, g, budget);
          detail::fill_census(report, g, fp);
          FinalValuation fin(th, g, fp.primary);
          std::vector<VerdictRow> rows;
          bool incomplete_primary = false;
          for (std::size_t i = 0; i < queries.size(); ++i) {
            try {
              Verdict v = verdict(queries[i], fin);
              incomplete_primary = incomplete_primary || !v.primary;
              rows.push_back({to_text(surface[i]),
                              v.primary ? to_string(*v.primary) : "not-computed",
                              v.final_value ? "true" : "false"});
            } catch (const outside_closure&) {
              // even the final value depends on an unregistered quantified
              // sentence; registering the query as a seed would resolve it
              incomplete_primary = true;
              rows.push_back({to_text(surface[i]), "not-computed", "not-computed"});
            }
          }
          if (incomplete_primary && auto_extend && !seeded) {
            seeded = true;  // one retry with the queries registered as seeds
            continue;
          }
          report.verdicts = std::move(rows);
          detail::emit(report, json, out);
          if (!json) err << "elapsed: " << timer.ms() << " ms\n";
          return 0;
        } catch (const enumeration_budget_exceeded&) {
          // Degrade to the least fixed point; report only what it forces.
          detail::fill_census_incomplete(report, g);
          Hypothesis lfp = least_fixed_point(th, g);
          std::vector<truth3> values = evaluate_all(lfp, g);
          for (std::size_t i = 0; i < queries.size(); ++i) {
            int id = g.id_of(queries[i]);
            if (id >= 0 && is_classical(values[id])) {
              const char* text = to_bool(values[id]) ? "true" : "false";
              report.verdicts.push_back({to_text(surface[i]), text, text});
            } else {
              report.verdicts.push_back({to_text(surface[i]), "?", "?"});
            }
          }
          detail::emit(report, json, out);
          if (!json) err << "elapsed: " << timer.ms() << " ms\n";
          return 2;
        }
      }
    }

    if (fixpoints->parsed()) {
      DepGraph g = closure({}, th, closure_cap);
      RunReport report = detail::base_report("fixpoints", theory_path);
      for (int id : g.t_core) report.core.push_back(to_text(g.nodes[id]));
      try {
        FixpointReport fp = maximal_intrinsic(th, g, budget);
        detail::fill_census(report, g, fp);
        std::size_t shown = 0;
        std::size_t intrinsic_at = 0;
        for (const auto& h : fp.all_fixed) {
          bool is_int =
              intrinsic_at < fp.intrinsic.size() && fp.intrinsic[intrinsic_at] == h;
          if (is_int) ++intrinsic_at;
          if (shown >= list_limit) continue;
          ++shown;
          report.fixed_points.push_back({detail::core_values(h), h == fp.least, is_int,
                                         h == fp.maximal_intrinsic});
        }
        report.fixed_points_omitted = fp.all_fixed.size() - shown;
        detail::emit(report, json, out);
        if (!json) err << "elapsed: " << timer.ms() << " ms\n";
        return 0;
      } catch (const enumeration_budget_exceeded&) {
        detail::fill_census_incomplete(report, g);
        detail::emit(report, json, out);
        if (!json) err << "elapsed: " << timer.ms() << " ms\n";
        return 2;
      }
    }

    if (laws->parsed()) {
      DepGraph g = closure({}, th, closure_cap);
      RunReport report = detail::base_report("laws", theory_path);
      FixpointReport fp = maximal_intrinsic(th, g, budget);
      detail::fill_census(report, g, fp);
      FinalValuation fin(th, g, fp.primary);
      bool failed = false;
      for (const LawReport& lr : check_all(fin, th, g)) {
        failed = failed || !lr.passed();
        report.laws.push_back({lr.name, lr.instances, lr.failures});
      }
      detail::emit(report, json, out);
      if (!json) err << "elapsed: " << timer.ms() << " ms\n";
      return failed ? 1 : 0;
    }

    // graph
    std::vector<FormulaPtr> seeds;
    for (const auto& text : sentences)
      seeds.push_back(expand_sugar(parse_sentence(text, th.signature)));
    DepGraph g = closure(seeds, th, closure_cap);
    std::string rendered;
    if (color) {
      FixpointReport fp = maximal_intrinsic(th, g, budget);
      rendered = export_dot(g, &fp.primary.values);
    } else {
      rendered = export_dot(g);
    }
    (void)dot;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw io_error("cannot write: " + out_path);
      f << rendered;
    } else {
      out << rendered;
    }
    return 0;
  } catch (const closure_budget_exceeded& e) {
    err << "budget: " << e.what() << "\n";
    return 2;
  } catch (const enumeration_budget_exceeded& e) {
    err << "budget: " << e.what() << "\n";
    return 2;
  } catch (const internal_invariant_violation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace veritas
