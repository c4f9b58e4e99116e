#include <catch2/catch_amalgamated.hpp>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/parser.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory.hpp"

using namespace veritas;

namespace {

Signature sig() {
  Signature s;
  s.declare_predicate("P", 1);
  s.declare_predicate("R", 2);
  s.declare_predicate("=", 2);
  s.declare_function("f", 1);
  s.declare_function("g", 2);
  s.declare_constant("a");
  s.declare_constant("b");
  s.declare_sentence_constant("L");
  s.declare_sentence_constant("M");
  return s;
}

FormulaPtr P(TermPtr t) { return mk_pred("P", {std::move(t)}); }

}  // namespace

TEST_CASE("printing respects precedence and associativity") {
  FormulaPtr A = P(mk_const("a")), B = P(mk_const("b")), C = mk_s(mk_sent_const("L"));
  CHECK(to_text(mk_imp(mk_imp(A, B), C)) == "(P(a) -> P(b)) -> S(L)");
  CHECK(to_text(mk_imp(A, mk_imp(B, C))) == "P(a) -> P(b) -> S(L)");
  CHECK(to_text(mk_and(mk_or(A, B), C)) == "(P(a) | P(b)) & S(L)");
  CHECK(to_text(mk_or(mk_and(A, B), C)) == "P(a) & P(b) | S(L)");
  CHECK(to_text(mk_and(A, mk_and(B, C))) == "P(a) & (P(b) & S(L))");
  CHECK(to_text(mk_and(mk_and(A, B), C)) == "P(a) & P(b) & S(L)");
  CHECK(to_text(mk_not(mk_and(A, B))) == "~(P(a) & P(b))");
  CHECK(to_text(mk_and(mk_not(A), B)) == "~P(a) & P(b)");
  CHECK(to_text(mk_not(mk_not(A))) == "~~P(a)");
  CHECK(to_text(mk_iff(A, mk_iff(B, C))) == "P(a) <-> P(b) <-> S(L)");
  CHECK(to_text(mk_iff(mk_iff(A, B), C)) == "(P(a) <-> P(b)) <-> S(L)");
  CHECK(to_text(mk_imp(mk_or(A, B), mk_and(B, C))) == "P(a) | P(b) -> P(b) & S(L)");
}

TEST_CASE("quantifier scope prints maximally and parenthesizes in context") {
  FormulaPtr body = mk_imp(mk_s(mk_var("x")), P(mk_var("x")));
  CHECK(to_text(mk_forall("x", body)) == "forall x. S(x) -> P(x)");
  CHECK(to_text(mk_and(mk_forall("x", mk_s(mk_var("x"))), P(mk_const("a")))) ==
        "(forall x. S(x)) & P(a)");
  CHECK(to_text(mk_not(mk_exists("x", mk_s(mk_var("x"))))) == "~(exists x. S(x))");
  CHECK(to_text(mk_t(mk_quote(mk_forall("x", mk_s(mk_var("x")))))) ==
        "T([forall x. S(x)])");
}

TEST_CASE("terms print canonically") {
  CHECK(to_text(mk_fun("g", {mk_const("a"), mk_fun("f", {mk_const("b")})})) == "g(a, f(b))");
  CHECK(to_text(mk_neg_name(mk_sent_const("L"))) == "!L");
  CHECK(to_text(mk_quote(mk_not(mk_t(mk_sent_const("L"))))) == "[~T(L)]");
  CHECK(to_text(mk_pred("=", {mk_const("a"), mk_const("b")})) == "(a = b)");
  CHECK(to_text(mk_pred("R", {mk_const("a"), mk_const("b")})) == "R(a, b)");
}

TEST_CASE("parsing round-trips the printed form") {
  Signature s = sig();
  std::vector<FormulaPtr> fs = {
      mk_not(mk_t(mk_sent_const("L"))),
      mk_imp(mk_t(mk_sent_const("L")), P(mk_const("a"))),
      mk_iff(mk_iff(P(mk_const("a")), P(mk_const("b"))), mk_s(mk_sent_const("L"))),
      mk_and(mk_or(P(mk_const("a")), P(mk_const("b"))), mk_not(P(mk_fun("f", {mk_const("a")})))),
      mk_forall("x", mk_imp(mk_s(mk_var("x")), mk_t(mk_var("x")))),
      mk_exists("x", mk_and(P(mk_var("x")), mk_not(mk_s(mk_var("x"))))),
      mk_t(mk_quote(mk_forall("x", mk_or(mk_s(mk_var("x")), P(mk_var("x")))))),
      mk_t(mk_neg_name(mk_sent_const("M"))),
      mk_f(mk_sent_const("L")),
      mk_u(mk_quote(mk_d(mk_sent_const("M")))),
      mk_pred("=", {mk_fun("g", {mk_const("a"), mk_const("b")}), mk_const("a")}),
      mk_pred("R", {mk_quote(mk_s(mk_const("a"))), mk_neg_name(mk_quote(P(mk_const("b"))))}),
  };
  for (const auto& f : fs) {
    FormulaPtr back = parse_formula(to_text(f), s);
    INFO(to_text(f));
    CHECK(equal(back, f));
  }
}

TEST_CASE("parsing handles redundant parentheses and whitespace") {
  Signature s = sig();
  CHECK(equal(parse_formula("((P(a)))", s), P(mk_const("a"))));
  CHECK(equal(parse_formula("  ~ ( T( L ) )  ", s), mk_not(mk_t(mk_sent_const("L")))));
  CHECK(equal(parse_formula("(P(a)&P(b))|P(a)", s),
              mk_or(mk_and(P(mk_const("a")), P(mk_const("b"))), P(mk_const("a")))));
}

TEST_CASE("implication chains associate to the right") {
  Signature s = sig();
  FormulaPtr f = parse_formula("P(a) -> P(b) -> S(L)", s);
  CHECK(equal(f, mk_imp(P(mk_const("a")), mk_imp(P(mk_const("b")), mk_s(mk_sent_const("L"))))));
}

TEST_CASE("conjunction chains associate to the left and bind above disjunction") {
  Signature s = sig();
  CHECK(equal(parse_formula("P(a) & P(b) & S(L)", s),
              mk_and(mk_and(P(mk_const("a")), P(mk_const("b"))), mk_s(mk_sent_const("L")))));
  CHECK(equal(parse_formula("P(a) | P(b) & S(L)", s),
              mk_or(P(mk_const("a")), mk_and(P(mk_const("b")), mk_s(mk_sent_const("L"))))));
}

TEST_CASE("quantifier scope extends maximally to the right") {
  Signature s = sig();
  FormulaPtr f = parse_formula("forall x. S(x) -> P(x)", s);
  REQUIRE(f->kind == FormulaKind::forall);
  CHECK(equal(f->left, mk_imp(mk_s(mk_var("x")), P(mk_var("x")))));
  FormulaPtr g = parse_formula("(forall x. S(x)) -> P(a)", s);
  CHECK(g->kind == FormulaKind::impl);
}

TEST_CASE("sugar atoms parse") {
  Signature s = sig();
  CHECK(equal(parse_formula("F(L)", s), mk_f(mk_sent_const("L"))));
  CHECK(equal(parse_formula("U([T(L)])", s), mk_u(mk_quote(mk_t(mk_sent_const("L"))))));
  CHECK(equal(parse_formula("D(!L)", s), mk_d(mk_neg_name(mk_sent_const("L")))));
}

TEST_CASE("equality parses only when declared") {
  Signature with = sig();
  CHECK(equal(parse_formula("(a = b)", with), mk_pred("=", {mk_const("a"), mk_const("b")})));
  Signature without;
  without.declare_constant("a");
  without.declare_constant("b");
  CHECK_THROWS_AS(parse_formula("(a = b)", without), syntax_error);
}

TEST_CASE("parse errors carry positions and are specific") {
  Signature s = sig();
  CHECK_THROWS_AS(parse_formula("P(a", s), syntax_error);
  CHECK_THROWS_AS(parse_formula("P(a))", s), syntax_error);
  CHECK_THROWS_AS(parse_formula("", s), syntax_error);
  CHECK_THROWS_AS(parse_formula("P()", s), arity_mismatch);
  CHECK_THROWS_AS(parse_formula("R(a)", s), arity_mismatch);
  CHECK_THROWS_AS(parse_formula("Z(a)", s), unknown_symbol);
  CHECK_THROWS_AS(parse_formula("P(zz)", s), unknown_symbol);
  CHECK_THROWS_AS(parse_formula("T(P)", s), syntax_error);     // predicate used as a term
  CHECK_THROWS_AS(parse_formula("forall T. S(T)", s), syntax_error);
  CHECK_THROWS_AS(parse_formula("P(a) <- P(b)", s), syntax_error);
  CHECK_THROWS_AS(parse_formula("T(!a) &", s), syntax_error);

  try {
    parse_formula("P(a) &\n& P(b)", s);
    FAIL("expected a syntax error");
  } catch (const syntax_error& e) {
    CHECK(std::string(e.what()).find("2:") != std::string::npos);  // line 2
  }
}

TEST_CASE("free variables do not parse: identifiers are variables only when bound") {
  Signature s = sig();
  CHECK_THROWS_AS(parse_sentence("P(x)", s), unknown_symbol);
  CHECK_THROWS_AS(parse_sentence("T([S(x)])", s), unknown_symbol);  // free under a quote
  CHECK(equal(parse_sentence("forall x. P(x)", s), mk_forall("x", P(mk_var("x")))));
  CHECK(equal(parse_sentence("forall x. T([S(x)])", s),
              mk_forall("x", mk_t(mk_quote(mk_s(mk_var("x")))))));
}

TEST_CASE("identifiers may be numeric or contain underscores") {
  Signature s;
  s.declare_constant("0");
  s.declare_predicate("=", 2);
  s.declare_constant("my_k");
  CHECK(equal(parse_formula("(0 = my_k)", s),
              mk_pred("=", {mk_const("0"), mk_const("my_k")})));
}
