#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <string>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory_file.hpp"

using namespace veritas;

namespace {
const char* kFull = R"(# a small classical base with one self-referential constant
domain a b c
pred P/1 = { (a) (b) }
pred R/2 = { (a,b) (b,c) }
fun f/1 = { (a)->b (b)->c (c)->a }
fun g/2 = { (a,a)->a (a,b)->a (a,c)->a (b,a)->b (b,b)->b (b,c)->b (c,a)->c (c,b)->c (c,c)->c }
const k = b
let L := ~T(L)
let M := T(L) -> P(k)
)";
}  // namespace

TEST_CASE("the full directive set loads") {
  Theory th = parse_theory(kFull);
  CHECK(th.base_domain == std::vector<std::string>{"a", "b", "c"});
  CHECK(th.pred_interp.at("P").size() == 2);
  CHECK(th.pred_interp.at("R").count({"b", "c"}) == 1);
  CHECK(th.fun_interp.at("f").at({"c"}) == "a");
  CHECK(th.fun_interp.at("g").size() == 9);
  CHECK(th.const_interp.at("k") == "b");
  CHECK(th.binding_order == std::vector<std::string>{"L", "M"});
  CHECK(to_text(th.constant_bindings.at("M")) == "T(L) -> P(k)");
  CHECK_NOTHROW(th.validate());
}

TEST_CASE("domain elements are usable as self-denoting constants") {
  Theory th = parse_theory(kFull);
  CHECK(th.const_interp.at("a") == "a");
  CHECK(to_text(parse_theory("domain a\nlet X := S(a)\n").constant_bindings.at("X")) ==
        "S(a)");
}

TEST_CASE("comments and blank lines are ignored anywhere") {
  Theory th = parse_theory("# leading\n\ndomain a   # trailing\n\n# in between\nconst k = a\n");
  CHECK(th.const_interp.at("k") == "a");
}

TEST_CASE("let bodies keep their surface text meaning but are stored expanded") {
  Theory th = parse_theory("let A := F(A)\n");
  CHECK(to_text(th.constant_bindings.at("A")) == "T(!A)");
  Theory u = parse_theory("let A := U(A)\n");
  CHECK(to_text(u.constant_bindings.at("A")) == "~T(A) & ~T(!A)");
}

TEST_CASE("empty interpretations make predicates false and nullary tuples work") {
  Theory th = parse_theory("pred l/0 = { }\npred ok/0 = { () }\n");
  CHECK(th.pred_interp.at("l").empty());
  CHECK(th.pred_interp.at("ok").count({}) == 1);
}

TEST_CASE("tuple separators may be spaces or commas") {
  Theory a = parse_theory("domain a b\npred P/1 = { (a) (b) }\n");
  Theory b = parse_theory("domain a b\npred P/1 = { (a), (b) }\n");
  CHECK(a.pred_interp.at("P") == b.pred_interp.at("P"));
}

TEST_CASE("reserved and duplicate declarations keep their error types") {
  CHECK_THROWS_AS(parse_theory("pred T/1 = { }\n"), reserved_symbol);
  CHECK_THROWS_AS(parse_theory("const forall = a\ndomain a\n"), reserved_symbol);
  CHECK_THROWS_AS(parse_theory("domain a\npred P/1 = { }\npred P/1 = { }\n"),
                  duplicate_declaration);
  CHECK_THROWS_AS(parse_theory("domain a\nconst a = a\n"), duplicate_declaration);
  CHECK_THROWS_AS(parse_theory("domain a a\n"), duplicate_declaration);
}

TEST_CASE("malformed directives are syntax errors with line positions") {
  auto check_line = [](const std::string& text, const std::string& line_tag) {
    try {
      parse_theory(text);
      FAIL("expected a syntax error for: " << text);
    } catch (const syntax_error& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(line_tag) == 0);
    }
  };
  check_line("pred P = { }\n", "1:");                       // missing arity
  check_line("domain a\n\nfun f/0 = { ()->a }\n", "3:");    // nullary function
  check_line("let X = T(X)\n", "1:");                       // '=' instead of ':='
  check_line("domain a\nconst k a\n", "2:");                // missing '='
  check_line("pred P/1 = (a)\n", "1:");                     // missing braces
  check_line("domain a\npred P/1 = { (a\n", "2:");          // unclosed tuple
  check_line("domain a\npred P/1 = { (a) } x\n", "2:");     // trailing junk
  check_line("wibble a\n", "1:");                           // unknown directive
  check_line("domain a\nlet X := T(\nX)\n", "3:");          // continuation lines are not directives
}

TEST_CASE("formula errors inside let bodies point at the right line") {
  try {
    parse_theory("domain a\n\nlet X := S(a) &\n");
    FAIL("expected a syntax error");
  } catch (const syntax_error& e) {
    CHECK(std::string(e.what()).rfind("3:", 0) == 0);
  }
}

TEST_CASE("interpretations are checked while loading") {
  CHECK_THROWS_AS(parse_theory("domain a\npred P/1 = { (a, a) }\n"), syntax_error);
  CHECK_THROWS_AS(parse_theory("domain a\npred P/1 = { (z) }\n"), unknown_symbol);
  CHECK_THROWS_AS(parse_theory("domain a b\nfun f/1 = { (a)->b }\n"),
                  incomplete_interpretation);  // not total
  CHECK_THROWS_AS(parse_theory("domain a\nconst k = z\n"), syntax_error);
  CHECK_THROWS_AS(parse_theory("let X := T(Y)\n"), unknown_symbol);
}

TEST_CASE("load_theory reads files and reports missing ones") {
  std::string path = "/tmp/veritas_loader_test.th";
  {
    std::ofstream f(path);
    f << "let I := T(I)\n";
  }
  Theory th = load_theory(path);
  CHECK(to_text(th.constant_bindings.at("I")) == "T(I)");
  CHECK_THROWS_AS(load_theory("/tmp/veritas_no_such_file.th"), io_error);
}
