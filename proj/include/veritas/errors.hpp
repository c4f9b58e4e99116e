#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace veritas {

// Base class of everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax. Positions are 1-based; line 0 means "unknown".
struct syntax_error : error {
  syntax_error(const std::string& msg, int line_ = 0, int column_ = 0)
      : error(format(msg, line_, column_)), line(line_), column(column_) {}
  int line;
  int column;

 private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }
};

struct unknown_symbol : error {
  explicit unknown_symbol(const std::string& sym)
      : error("unknown symbol '" + sym + "'"), symbol(sym) {}
  std::string symbol;
};

struct arity_mismatch : error {
  arity_mismatch(const std::string& sym, int expected, int got)
      : error("symbol '" + sym + "' expects " + std::to_string(expected) +
              " argument(s), got " + std::to_string(got)) {}
};

struct duplicate_declaration : error {
  explicit duplicate_declaration(const std::string& sym)
      : error("duplicate declaration of '" + sym + "'") {}
};

struct reserved_symbol : error {
  explicit reserved_symbol(const std::string& sym)
      : error("'" + sym + "' is reserved and cannot be declared") {}
};

struct unbound_constant : error {
  explicit unbound_constant(const std::string& sym)
      : error("constant '" + sym + "' has no interpretation") {}
};

struct incomplete_interpretation : error {
  using error::error;
};

// Name-level negation applied to a term that names a non-sentence.
struct non_sentence_neg_name : error {
  explicit non_sentence_neg_name(const std::string& term)
      : error("name negation of '" + term + "' which denotes a non-sentence") {}
};

struct not_a_sentence : error {
  explicit not_a_sentence(const std::string& text)
      : error("formula is not closed: " + text) {}
};

struct closure_budget_exceeded : error {
  explicit closure_budget_exceeded(std::size_t cap)
      : error("sentence closure exceeds the node cap of " + std::to_string(cap)) {}
};

struct enumeration_budget_exceeded : error {
  enumeration_budget_exceeded(std::size_t core, std::size_t budget)
      : error("hypothesis space 3^" + std::to_string(core) +
              " exceeds the budget of " + std::to_string(budget)),
        core_size(core) {}
  std::size_t core_size;
};

// A query dereferences a sentence that is not registered in the closure and
// whose value cannot be derived soundly without re-registration.
struct outside_closure : error {
  explicit outside_closure(const std::string& sentence_text)
      : error("sentence not registered in the theory closure: " + sentence_text),
        sentence(sentence_text) {}
  std::string sentence;
};

struct internal_invariant_violation : error {
  using error::error;
};

struct io_error : error {
  using error::error;
};

}  // namespace veritas
