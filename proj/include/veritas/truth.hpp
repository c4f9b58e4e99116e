#pragma once

/// Three-valued truth values and the strong Kleene connectives.
///
/// The numeric order undetermined < falsum < verum is the canonical value
/// order used everywhere an ordering over truth values is needed (sorting,
/// enumeration, reports). It is unrelated to the information order, which is
/// exposed separately as info_leq.

#include <string>

#include "veritas/errors.hpp"

namespace veritas {

enum class truth3 : unsigned char {
  undetermined = 0,
  falsum = 1,
  verum = 2,
};

constexpr truth3 from_bool(bool b) { return b ? truth3::verum : truth3::falsum; }

constexpr bool is_classical(truth3 v) { return v != truth3::undetermined; }

// pre: is_classical(v)
constexpr bool to_bool(truth3 v) { return v == truth3::verum; }

constexpr char to_char(truth3 v) {
  switch (v) {
    case truth3::verum: return 'T';
    case truth3::falsum: return 'F';
    default: return '|';
  }
}

inline std::string to_string(truth3 v) {
  switch (v) {
    case truth3::verum: return "true";
    case truth3::falsum: return "false";
    default: return "undetermined";
  }
}

constexpr truth3 neg3(truth3 a) {
  if (a == truth3::verum) return truth3::falsum;
  if (a == truth3::falsum) return truth3::verum;
  return truth3::undetermined;
}

// Conjunction: false dominates, truth requires both.
constexpr truth3 and3(truth3 a, truth3 b) {
  if (a == truth3::falsum || b == truth3::falsum) return truth3::falsum;
  if (a == truth3::verum && b == truth3::verum) return truth3::verum;
  return truth3::undetermined;
}

// Disjunction: truth dominates, falsity requires both.
constexpr truth3 or3(truth3 a, truth3 b) {
  if (a == truth3::verum || b == truth3::verum) return truth3::verum;
  if (a == truth3::falsum && b == truth3::falsum) return truth3::falsum;
  return truth3::undetermined;
}

// Material conditional, defined as or3(neg3(a), b).
constexpr truth3 imp3(truth3 a, truth3 b) { return or3(neg3(a), b); }

// Biconditional, defined as and3(imp3(a, b), imp3(b, a)).
constexpr truth3 iff3(truth3 a, truth3 b) { return and3(imp3(a, b), imp3(b, a)); }

// Information order: undetermined is below everything, classical values are
// incomparable with each other.
constexpr bool info_leq(truth3 a, truth3 b) {
  return a == truth3::undetermined || a == b;
}

// Least upper bound in the information order.
// throws internal_invariant_violation on a classical conflict.
inline truth3 info_join(truth3 a, truth3 b) {
  if (a == truth3::undetermined) return b;
  if (b == truth3::undetermined) return a;
  if (a == b) return a;
  throw internal_invariant_violation("information join of conflicting classical values");
}

}  // namespace veritas
