#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argstr/argument.hpp"
#include "argstr/theory.hpp"

namespace argstr {

/// 1-based line and column; `length` in bytes (0 when pointing between tokens).
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

/// One line of a theory file:
///
///     axiom  <id>: <lit>
///     prem   <id>: <lit> w=<float>
///     strict <id>: <lit>, ... -> <lit>
///     defeas <id>: <lit>, ... => <lit> w=<float>
///
/// `literal` holds the premise for axiom/prem lines and the consequent for
/// rules. Axiom and strict lines carry no weight.
struct Statement {
  enum class Kind { Axiom, Premise, Strict, Defeasible };

  Kind kind = Kind::Axiom;
  std::string id;
  std::vector<Literal> antecedents;
  Literal literal;
  std::optional<double> weight;
  SourceSpan span;

  bool is_rule() const { return kind == Kind::Strict || kind == Kind::Defeasible; }

  /// Ignores `span`.
  friend bool operator==(const Statement& a, const Statement& b) {
    return a.kind == b.kind && a.id == b.id && a.antecedents == b.antecedents && a.literal == b.literal &&
           a.weight == b.weight;
  }
};

struct TheoryDocument {
  std::vector<Statement> statements;

  friend bool operator==(const TheoryDocument&, const TheoryDocument&) = default;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;

  /// `line:column: message`
  std::string str() const;
};

struct ParseResult {
  std::optional<TheoryDocument> document;  // empty whenever diagnostics exist
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return document.has_value(); }
};

/// Parses the line-oriented theory format; `#` starts a comment. Never
/// returns a partial document.
ParseResult parse_theory(std::string_view text);

/// Canonical text: one statement per line, `, ` between antecedents.
std::string print_theory(const TheoryDocument& doc);

WeightedTheory to_theory(const TheoryDocument& doc);

/// Premises get ids `a1..` (axioms) and `p1..` (ordinary), skipping ids used
/// by rules. Order: axioms, ordinary premises, rules in theory order.
TheoryDocument from_theory(const WeightedTheory& t);

/// Shortest text that reads back to the same double.
std::string format_weight(double w);

/// Builds an argument from its expression, e.g. `s1[d1[a1],p1]`. A bare
/// literal states a premise; `rule[...]` applies a rule to the listed
/// antecedents in any order. Throws std::invalid_argument on syntax errors
/// and ArgumentError when the argument is not well formed.
Argument parse_argument(const WeightedTheory& t, std::string_view expr);

}  // namespace argstr
