#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>

#include "support/paths.hpp"
#include "veritas/errors.hpp"
#include "veritas/final.hpp"
#include "veritas/fixpoint.hpp"
#include "veritas/graph.hpp"
#include "veritas/parser.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory_file.hpp"

using namespace veritas;
using enum truth3;

namespace {

struct Fixture {
  Theory th;
  DepGraph g;
  FinalValuation fin;

  explicit Fixture(const std::string& name)
      : th(load_theory(theory_path(name))),
        g(closure({}, th)),
        fin(th, g, maximal_intrinsic(th, g).primary) {}

  Verdict at(const std::string& text) const {
    return verdict(parse_formula(text, th.signature), fin);
  }
};

}  // namespace

TEST_CASE("liar verdicts: undetermined primary, classical final layer") {
  Fixture f("liar.th");
  CHECK(f.at("T(nL)").primary == undetermined);
  CHECK(f.at("T(nL)").final_value == false);
  CHECK(f.at("~T(nL)").primary == undetermined);
  CHECK(f.at("~T(nL)").final_value == true);
  // "the liar is undetermined" is undetermined itself, yet finally true
  CHECK(f.at("U(nL)").primary == undetermined);
  CHECK(f.at("U(nL)").final_value == true);
  CHECK(f.at("D(nL)").primary == undetermined);
  CHECK(f.at("D(nL)").final_value == false);
  CHECK(f.at("F(nL)").primary == undetermined);
  CHECK(f.at("F(nL)").final_value == false);
}

TEST_CASE("strong liar verdicts and the classical biconditional failure") {
  Fixture f("strong_liar.th");
  CHECK(f.at("~T(LL)").primary == undetermined);
  CHECK(f.at("~T(LL)").final_value == true);
  CHECK(f.at("T(LL)").final_value == false);
  // the naive truth biconditional for the strong liar is finally false
  Verdict v = f.at("T(LL) <-> ~T(LL)");
  CHECK(v.primary == undetermined);
  CHECK(v.final_value == false);
}

TEST_CASE("truthteller verdicts") {
  Fixture f("truthteller.th");
  CHECK(f.at("T(I)").primary == undetermined);
  CHECK(f.at("T(I)").final_value == false);
  CHECK(f.at("~T(I)").final_value == true);
}

TEST_CASE("curry verdicts: the conditional is finally true, its truth is not") {
  Fixture f("curry.th");
  CHECK(f.at("T(C) -> l()").primary == undetermined);
  CHECK(f.at("T(C) -> l()").final_value == true);
  CHECK(f.at("T(C)").primary == undetermined);
  CHECK(f.at("T(C)").final_value == false);
  CHECK(f.at("l()").primary == falsum);
  CHECK(f.at("l()").final_value == false);
}

TEST_CASE("logician verdicts are classical through both layers") {
  Fixture f("logician.th");
  CHECK(f.at("T(Log) | T(nLog)").primary == verum);
  CHECK(f.at("T(Log) | T(nLog)").final_value == true);
  CHECK(f.at("~(T(Log) | T(nLog))").primary == falsum);
  CHECK(f.at("~(T(Log) | T(nLog))").final_value == false);
  CHECK(f.at("T(Log)").primary == verum);
  CHECK(f.at("T(nLog)").primary == falsum);
}

TEST_CASE("final agrees with every classical primary value") {
  for (const char* name :
       {"liar.th", "strong_liar.th", "truthteller.th", "curry.th", "logician.th"}) {
    Fixture f(name);
    const PrimaryValuation& p = f.fin.primary();
    for (std::size_t i = 0; i < p.sentences.size(); ++i) {
      if (!is_classical(p.values[i])) continue;
      INFO(name << ": " << to_text(p.sentences[i]));
      CHECK(f.fin.eval(p.sentences[i]) == to_bool(p.values[i]));
    }
  }
}

TEST_CASE("primary extension forces values of unregistered quantifier-free sentences") {
  Fixture f("curry.th");
  // T(C) is undetermined, but a conditional out of a false antecedent is forced
  CHECK(f.fin.primary_extended(parse_formula("l() -> T(C)", f.th.signature)) == verum);
  CHECK(f.fin.primary_extended(parse_formula("l() & T(C)", f.th.signature)) == falsum);
  CHECK(f.fin.primary_extended(parse_formula("l() | T(C)", f.th.signature)) == undetermined);

  Fixture l("liar.th");
  CHECK(l.fin.primary_extended(parse_formula("T([~T(nL)])", l.th.signature)) == undetermined);
  CHECK(l.fin.primary_extended(parse_formula("T([T([~T(nL)])])", l.th.signature)) ==
        undetermined);
  CHECK(l.fin.primary_extended(parse_formula("~~T(nL)", l.th.signature)) == undetermined);
  CHECK(l.fin.primary_extended(parse_formula("T([S(nL)])", l.th.signature)) == verum);
  CHECK(l.fin.primary_extended(parse_formula("S(nL)", l.th.signature)) == verum);
}

TEST_CASE("truth of a non-sentence name is plain falsity") {
  Theory th = parse_theory("domain a\nconst k = a\nlet A := T(k)\n");
  DepGraph g = closure({}, th);
  FinalValuation fin(th, g, maximal_intrinsic(th, g).primary);
  CHECK(fin.primary_extended(parse_formula("T(k)", th.signature)) == falsum);
  CHECK(fin.eval(parse_formula("T(k)", th.signature)) == false);
  // name negation of a non-sentence denotes nothing; its truth atom is false
  CHECK(fin.primary_extended(parse_formula("T(!k)", th.signature)) == falsum);
  CHECK(fin.eval(parse_formula("T(!k)", th.signature)) == false);
}

TEST_CASE("unregistered quantified sentences: no primary verdict, final still total") {
  Fixture f("liar.th");
  FormulaPtr q = parse_formula("forall x. T(x)", f.th.signature);
  CHECK_THROWS_AS(f.fin.primary_extended(q), outside_closure);
  Verdict v = verdict(q, f.fin);
  CHECK_FALSE(v.primary.has_value());
  // range holds only the liar sentence, whose primary value is not true
  CHECK(v.final_value == false);

  FormulaPtr e = parse_formula("exists x. ~T(x)", f.th.signature);
  CHECK_FALSE(verdict(e, f.fin).primary.has_value());
  CHECK(verdict(e, f.fin).final_value == true);

  // dereferencing an unregistered quantified sentence leaves even the final
  // value underivable, so the refusal propagates out of verdict itself
  FormulaPtr deref = parse_formula("T([forall x. T(x)])", f.th.signature);
  CHECK_THROWS_AS(f.fin.primary_extended(deref), outside_closure);
  CHECK_THROWS_AS(verdict(deref, f.fin), outside_closure);
}

TEST_CASE("registered quantified sentences do have primary verdicts") {
  Theory th = load_theory(theory_path("liar.th"));
  FormulaPtr q = parse_formula("forall x. T(x)", th.signature);
  DepGraph g = closure({q}, th);
  FinalValuation fin(th, g, maximal_intrinsic(th, g).primary);
  Verdict v = verdict(q, fin);
  REQUIRE(v.primary.has_value());
  // the universal quantifies over itself; with the liar instance undetermined
  // it can consistently be false and never true, so falsity is intrinsic
  CHECK(v.primary == falsum);
  CHECK(v.final_value == false);
}

TEST_CASE("final evaluation rejects open formulas") {
  Fixture f("liar.th");
  FormulaPtr open = mk_s(mk_var("x"));
  CHECK_THROWS_AS(f.fin.eval(open), not_a_sentence);
  CHECK_THROWS_AS(verdict(open, f.fin), not_a_sentence);
}

TEST_CASE("final valuation is deterministic and memoization is invisible") {
  Fixture a("logician.th");
  FormulaPtr s = parse_formula("forall x. (T(x) | ~T(x))", a.th.signature);
  bool first = a.fin.eval(s);
  CHECK(a.fin.eval(s) == first);
  Fixture b("logician.th");
  CHECK(b.fin.eval(s) == first);
  CHECK(final_eval(s, b.fin, b.th) == first);
}
