#pragma once

/// Line-oriented theory file format:
///
///   # comment (to end of line)
///   domain a b c
///   pred P/1 = { (a) (b) }
///   pred ok/0 = { () }          empty braces make a nullary predicate false
///   fun f/2 = { (a,b)->c ... }  must be total on the domain
///   const k = a
///   let NAME := <formula>
///
/// Declarations are collected in a first pass, so `let` bodies may reference
/// sentence constants declared further down (mutual reference). Every domain
/// element is automatically declared as a constant naming itself. The
/// designated default sentence is the first `let` binding.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "veritas/ast.hpp"
#include "veritas/errors.hpp"
#include "veritas/parser.hpp"
#include "veritas/printer.hpp"
#include "veritas/theory.hpp"

namespace veritas {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!ident_char(c)) return false;
  return true;
}

struct RawDirective {
  enum class Kind { domain, pred, fun, constant, let } kind;
  int line;
  std::string name;  // pred/fun/const/let
  int arity = 0;     // pred/fun
  std::string body;  // interpretation text or formula text
  std::vector<std::string> elements;  // domain
};

class TheoryFileParser {
 public:
  Theory parse(const std::string& text) {
    scan(text);
    Theory th;
    declare(th);
    interpret(th);
    th.validate();
    return th;
  }

 private:
  std::vector<RawDirective> directives_;

  [[noreturn]] static void fail(const std::string& msg, int line) {
    throw syntax_error(msg, line, 1);
  }

  void scan(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::string line = trim(raw);
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string head;
      ls >> head;
      std::string rest = trim(line.substr(head.size()));
      if (head == "domain") {
        RawDirective d{RawDirective::Kind::domain, lineno, "", 0, "", {}};
        std::istringstream es(rest);
        std::string e;
        while (es >> e) {
          if (!valid_name(e)) fail("bad domain element name '" + e + "'", lineno);
          d.elements.push_back(e);
        }
        if (d.elements.empty()) fail("empty domain directive", lineno);
        directives_.push_back(std::move(d));
      } else if (head == "pred" || head == "fun") {
        auto slash = rest.find('/');
        if (slash == std::string::npos) fail("expected NAME/ARITY", lineno);
        std::string name = trim(rest.substr(0, slash));
        std::string after = rest.substr(slash + 1);
        auto eq = after.find('=');
        if (eq == std::string::npos) fail("expected '=' after arity", lineno);
        std::string arity_text = trim(after.substr(0, eq));
        std::string body = trim(after.substr(eq + 1));
        if (name != "=" && !valid_name(name)) fail("bad symbol name '" + name + "'", lineno);
        int arity = 0;
        try {
          std::size_t used = 0;
          arity = std::stoi(arity_text, &used);
          if (used != arity_text.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
          fail("bad arity '" + arity_text + "'", lineno);
        }
        if (arity < 0) fail("negative arity", lineno);
        if (head == "fun" && arity == 0) fail("use 'const' for a nullary function", lineno);
        directives_.push_back({head == "pred" ? RawDirective::Kind::pred : RawDirective::Kind::fun,
                               lineno, name, arity, body, {}});
      } else if (head == "const") {
        auto eq = rest.find('=');
        if (eq == std::string::npos) fail("expected 'const NAME = element'", lineno);
        std::string name = trim(rest.substr(0, eq));
        std::string body = trim(rest.substr(eq + 1));
        if (!valid_name(name)) fail("bad constant name '" + name + "'", lineno);
        directives_.push_back({RawDirective::Kind::constant, lineno, name, 0, body, {}});
      } else if (head == "let") {
        auto assign = rest.find(":=");
        if (assign == std::string::npos) fail("expected 'let NAME := formula'", lineno);
        std::string name = trim(rest.substr(0, assign));
        std::string body = trim(rest.substr(assign + 2));
        if (!valid_name(name)) fail("bad sentence constant name '" + name + "'", lineno);
        if (body.empty()) fail("empty binding for '" + name + "'", lineno);
        directives_.push_back({RawDirective::Kind::let, lineno, name, 0, body, {}});
      } else {
        fail("unknown directive '" + head + "'", lineno);
      }
    }
  }

  // Declaration errors (reserved_symbol, duplicate_declaration) propagate
  // with their own types; only malformed text becomes a syntax_error.
  void declare(Theory& th) {
    for (const auto& d : directives_) {
      switch (d.kind) {
        case RawDirective::Kind::domain:
          for (const auto& e : d.elements) {
            th.signature.declare_constant(e);  // elements name themselves
            th.base_domain.push_back(e);
            th.const_interp[e] = e;
          }
          break;
        case RawDirective::Kind::pred:
          th.signature.declare_predicate(d.name, d.arity);
          th.pred_interp[d.name];  // default empty interpretation
          break;
        case RawDirective::Kind::fun:
          th.signature.declare_function(d.name, d.arity);
          th.fun_interp[d.name];
          break;
        case RawDirective::Kind::constant:
          th.signature.declare_constant(d.name);
          break;
        case RawDirective::Kind::let:
          th.signature.declare_sentence_constant(d.name);
          th.binding_order.push_back(d.name);
          break;
      }
    }
  }

  void interpret(Theory& th) {
    for (const auto& d : directives_) {
      switch (d.kind) {
        case RawDirective::Kind::domain:
          break;
        case RawDirective::Kind::pred: {
          for (auto& tup : tuples(d, false))
            th.pred_interp[d.name].insert(std::move(tup.first));
          break;
        }
        case RawDirective::Kind::fun: {
          for (auto& tup : tuples(d, true))
            th.fun_interp[d.name][std::move(tup.first)] = std::move(tup.second);
          break;
        }
        case RawDirective::Kind::constant: {
          if (!th.has_element(d.body))
            fail("'" + d.body + "' is not a domain element", d.line);
          th.const_interp[d.name] = d.body;
          break;
        }
        case RawDirective::Kind::let: {
          FormulaPtr f =
              detail::FormulaParser(detail::tokenize(d.body, d.line), th.signature).parse();
          FormulaPtr core = expand_sugar(f);
          if (!is_sentence(core))
            fail("binding of '" + d.name + "' is not closed", d.line);
          th.constant_bindings[d.name] = core;
          break;
        }
      }
    }
  }

  // Parses "{ (a,b)->c ... }" bodies; pred tuples have no arrow part.
  std::vector<std::pair<std::vector<std::string>, std::string>> tuples(const RawDirective& d,
                                                                       bool with_value) {
    std::vector<std::pair<std::vector<std::string>, std::string>> out;
    const std::string& s = d.body;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto expect = [&](char c) {
      if (i >= s.size() || s[i] != c)
        fail(std::string("expected '") + c + "' in interpretation", d.line);
      ++i;
    };
    auto word = [&]() -> std::string {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      if (j == i) fail("expected a domain element", d.line);
      std::string w = s.substr(i, j - i);
      i = j;
      return w;
    };
    skip_ws();
    expect('{');
    while (true) {
      skip_ws();
      if (i < s.size() && s[i] == ',') {  // optional separator between tuples
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == '}') {
        ++i;
        break;
      }
      expect('(');
      std::vector<std::string> tup;
      skip_ws();
      if (i < s.size() && s[i] != ')') {
        tup.push_back(word());
        skip_ws();
        while (i < s.size() && s[i] == ',') {
          ++i;
          skip_ws();
          tup.push_back(word());
          skip_ws();
        }
      }
      expect(')');
      if (static_cast<int>(tup.size()) != d.arity)
        fail("tuple arity mismatch for '" + d.name + "'", d.line);
      std::string value;
      if (with_value) {
        skip_ws();
        expect('-');
        expect('>');
        skip_ws();
        value = word();
      }
      out.emplace_back(std::move(tup), std::move(value));
    }
    skip_ws();
    if (i != s.size()) fail("trailing text after interpretation", d.line);
    return out;
  }
};

}  // namespace detail

// Parses theory text (see the format above). The source name appears in IO
// errors only; syntax errors carry line numbers.
inline Theory parse_theory(const std::string& text) {
  return detail::TheoryFileParser().parse(text);
}

inline Theory load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open theory file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

}  // namespace veritas
