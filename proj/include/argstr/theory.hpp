#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace argstr {

/// A propositional (or opaque ground-predicate) atom with an optional
/// classical negation. `bird(tweety)` is just an atom string here.
struct Literal {
  std::string atom;
  bool negated = false;

  Literal() = default;
  Literal(std::string a, bool neg = false) : atom(std::move(a)), negated(neg) {}

  /// Parses `p` or `~p`; no validation of the atom beyond non-emptiness.
  static Literal from_string(std::string_view text);
  std::string str() const { return negated ? "~" + atom : atom; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using LiteralSet = std::set<Literal>;

Literal complement(const Literal& l);

enum class RuleKind { Strict, Defeasible };

struct InferenceRule {
  std::string id;
  LiteralSet antecedents;
  Literal consequent;
  RuleKind kind = RuleKind::Defeasible;

  bool is_strict() const { return kind == RuleKind::Strict; }
  friend bool operator==(const InferenceRule&, const InferenceRule&) = default;
};

struct KnowledgeBase {
  LiteralSet axioms;
  LiteralSet ordinary;
};

/// Rules, a knowledge base and the weight function `s`.
///
/// Rule weights key on the rule id and premise weights on the literal, so two
/// syntactically identical rules with different ids may carry different
/// weights. Construction performs no checks; run `validate_theory` before
/// building arguments over a theory that came from outside.
struct WeightedTheory {
  std::vector<InferenceRule> rules;
  KnowledgeBase kb;
  std::map<std::string, double> rule_weights;
  std::map<Literal, double> premise_weights;

  const InferenceRule* find_rule(std::string_view id) const;
  std::optional<double> rule_weight(std::string_view id) const;
  std::optional<double> premise_weight(const Literal& l) const;
  std::vector<InferenceRule> strict_rules() const;

  /// Adds a rule together with its weight. Throws std::invalid_argument on a
  /// duplicate id.
  void add_rule(InferenceRule rule, double weight);
  void add_axiom(const Literal& l);
  void add_ordinary(const Literal& l, double weight);
};

/// Least superset of `s` closed under the strict rules in `rules`
/// (defeasible rules are ignored).
LiteralSet strict_closure(const LiteralSet& s, std::span<const InferenceRule> rules);

bool is_directly_consistent(const LiteralSet& s);
bool is_indirectly_consistent(const LiteralSet& s, std::span<const InferenceRule> rules);

enum class Violation {
  DuplicateRuleId,
  StrictRuleWeightNotOne,
  DefeasibleRuleWeightOutOfRange,
  AxiomWeightNotOne,
  OrdinaryWeightOutOfRange,
  AxiomOrdinaryOverlap,
  AxiomsIndirectlyInconsistent,
  MissingWeight,
  DanglingWeight,
  EmptyAtom,
};

std::string_view to_string(Violation v);

struct ValidationIssue {
  Violation code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  bool has(Violation v) const;
  std::size_t count(Violation v) const;
};

/// Reports every violated theory invariant. Never throws.
ValidationReport validate_theory(const WeightedTheory& t);

}  // namespace argstr
