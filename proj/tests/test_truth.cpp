#include <catch2/catch_amalgamated.hpp>

#include "veritas/truth.hpp"

using veritas::truth3;
using enum veritas::truth3;

TEST_CASE("value order is undetermined < falsum < verum") {
  CHECK(static_cast<int>(undetermined) == 0);
  CHECK(static_cast<int>(falsum) == 1);
  CHECK(static_cast<int>(verum) == 2);
  CHECK(undetermined < falsum);
  CHECK(falsum < verum);
}

TEST_CASE("classical embedding") {
  CHECK(veritas::from_bool(true) == verum);
  CHECK(veritas::from_bool(false) == falsum);
  CHECK(veritas::is_classical(verum));
  CHECK(veritas::is_classical(falsum));
  CHECK_FALSE(veritas::is_classical(undetermined));
  CHECK(veritas::to_bool(verum));
  CHECK_FALSE(veritas::to_bool(falsum));
}

TEST_CASE("negation table") {
  CHECK(veritas::neg3(verum) == falsum);
  CHECK(veritas::neg3(falsum) == verum);
  CHECK(veritas::neg3(undetermined) == undetermined);
}

TEST_CASE("conjunction table, cell by cell") {
  CHECK(veritas::and3(verum, verum) == verum);
  CHECK(veritas::and3(verum, falsum) == falsum);
  CHECK(veritas::and3(verum, undetermined) == undetermined);
  CHECK(veritas::and3(falsum, verum) == falsum);
  CHECK(veritas::and3(falsum, falsum) == falsum);
  CHECK(veritas::and3(falsum, undetermined) == falsum);
  CHECK(veritas::and3(undetermined, verum) == undetermined);
  CHECK(veritas::and3(undetermined, falsum) == falsum);
  CHECK(veritas::and3(undetermined, undetermined) == undetermined);
}

TEST_CASE("disjunction table, cell by cell") {
  CHECK(veritas::or3(verum, verum) == verum);
  CHECK(veritas::or3(verum, falsum) == verum);
  CHECK(veritas::or3(verum, undetermined) == verum);
  CHECK(veritas::or3(falsum, verum) == verum);
  CHECK(veritas::or3(falsum, falsum) == falsum);
  CHECK(veritas::or3(falsum, undetermined) == undetermined);
  CHECK(veritas::or3(undetermined, verum) == verum);
  CHECK(veritas::or3(undetermined, falsum) == undetermined);
  CHECK(veritas::or3(undetermined, undetermined) == undetermined);
}

TEST_CASE("implication is defined from negation and disjunction") {
  for (truth3 a : {undetermined, falsum, verum})
    for (truth3 b : {undetermined, falsum, verum})
      CHECK(veritas::imp3(a, b) == veritas::or3(veritas::neg3(a), b));
  CHECK(veritas::imp3(falsum, undetermined) == verum);
  CHECK(veritas::imp3(undetermined, verum) == verum);
  CHECK(veritas::imp3(undetermined, undetermined) == undetermined);
  CHECK(veritas::imp3(verum, undetermined) == undetermined);
  CHECK(veritas::imp3(undetermined, falsum) == undetermined);
}

TEST_CASE("biconditional table") {
  CHECK(veritas::iff3(verum, verum) == verum);
  CHECK(veritas::iff3(falsum, falsum) == verum);
  CHECK(veritas::iff3(verum, falsum) == falsum);
  CHECK(veritas::iff3(falsum, verum) == falsum);
  for (truth3 a : {undetermined, falsum, verum}) {
    CHECK(veritas::iff3(a, undetermined) == undetermined);
    CHECK(veritas::iff3(undetermined, a) == undetermined);
  }
}

TEST_CASE("connectives are monotone in the information order") {
  const truth3 all[] = {undetermined, falsum, verum};
  auto leq = [](truth3 a, truth3 b) { return veritas::info_leq(a, b); };
  for (truth3 a : all)
    for (truth3 a2 : all)
      for (truth3 b : all)
        for (truth3 b2 : all) {
          if (!leq(a, a2) || !leq(b, b2)) continue;
          CHECK(leq(veritas::and3(a, b), veritas::and3(a2, b2)));
          CHECK(leq(veritas::or3(a, b), veritas::or3(a2, b2)));
          CHECK(leq(veritas::imp3(a, b), veritas::imp3(a2, b2)));
          CHECK(leq(veritas::iff3(a, b), veritas::iff3(a2, b2)));
          CHECK(leq(veritas::neg3(a), veritas::neg3(a2)));
        }
}

TEST_CASE("classical restrictions agree with two-valued logic") {
  for (bool a : {false, true})
    for (bool b : {false, true}) {
      truth3 ta = veritas::from_bool(a), tb = veritas::from_bool(b);
      CHECK(veritas::and3(ta, tb) == veritas::from_bool(a && b));
      CHECK(veritas::or3(ta, tb) == veritas::from_bool(a || b));
      CHECK(veritas::imp3(ta, tb) == veritas::from_bool(!a || b));
      CHECK(veritas::iff3(ta, tb) == veritas::from_bool(a == b));
    }
}

TEST_CASE("information order and join") {
  CHECK(veritas::info_leq(undetermined, verum));
  CHECK(veritas::info_leq(undetermined, falsum));
  CHECK(veritas::info_leq(undetermined, undetermined));
  CHECK(veritas::info_leq(verum, verum));
  CHECK_FALSE(veritas::info_leq(verum, falsum));
  CHECK_FALSE(veritas::info_leq(falsum, verum));
  CHECK_FALSE(veritas::info_leq(verum, undetermined));

  CHECK(veritas::info_join(undetermined, verum) == verum);
  CHECK(veritas::info_join(falsum, undetermined) == falsum);
  CHECK(veritas::info_join(verum, verum) == verum);
  CHECK_THROWS_AS(veritas::info_join(verum, falsum), veritas::internal_invariant_violation);
}

TEST_CASE("rendering") {
  CHECK(veritas::to_char(verum) == 'T');
  CHECK(veritas::to_char(falsum) == 'F');
  CHECK(veritas::to_char(undetermined) == '|');
  CHECK(veritas::to_string(verum) == "true");
  CHECK(veritas::to_string(falsum) == "false");
  CHECK(veritas::to_string(undetermined) == "undetermined");
}
