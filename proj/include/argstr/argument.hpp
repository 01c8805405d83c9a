#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "argstr/multiset.hpp"
#include "argstr/theory.hpp"

namespace argstr {

/// One occurrence of a premise or rule inside an argument. Elements carry
/// their weight so that strengths can be computed without the theory.
struct BasisElement {
  enum class Kind { Axiom, OrdinaryPremise, StrictRule, DefeasibleRule };

  Kind kind;
  std::string name;  // literal text for premises, rule id for rules
  double weight;

  bool is_rule() const { return kind == Kind::StrictRule || kind == Kind::DefeasibleRule; }
  bool is_premise() const { return !is_rule(); }

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

using BasisMultiset = Multiset<BasisElement>;

enum class ArgumentErrc {
  LiteralNotInKnowledgeBase,
  MissingWeight,
  UnknownRule,
  AntecedentMismatch,
  InconsistentSubarguments,
  DuplicateNonStrictConclusion,
};

std::string_view to_string(ArgumentErrc e);

class ArgumentError : public std::runtime_error {
 public:
  ArgumentError(ArgumentErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ArgumentErrc code() const noexcept { return code_; }

 private:
  ArgumentErrc code_;
};

namespace detail {
struct ArgumentNode;
}

/// An immutable inference tree: either a premise leaf or a rule applied to a
/// set of antecedent arguments (one per antecedent literal of the rule).
///
/// Two keys identify an argument:
///  - `key()` is the structural identity, written in the argument expression
///    syntax (`s1[d1[a1],p1]`): leaves are literals and inferences are
///    `rule_id[children]` with children ordered by conclusion.
///  - `signature()` depends only on shape and weights, so two arguments share
///    a signature exactly when they are isomorphic.
///
/// The premise/rule multisets are computed once at construction.
class Argument {
 public:
  const Literal& conclusion() const;
  /// nullptr for premise leaves ("undefined").
  const InferenceRule* top_rule() const;
  /// Weight of the stated premise, or of the top rule.
  double weight() const;
  bool is_premise() const { return top_rule() == nullptr; }
  bool is_axiom_premise() const;

  /// Antecedent arguments ordered by conclusion; empty for leaves.
  std::span<const Argument> antecedents() const;
  /// Sub(A): every subargument including the argument itself, ordered by key.
  std::vector<Argument> sub() const;

  const BasisMultiset& def_rules() const;
  const BasisMultiset& str_rules() const;
  const BasisMultiset& ord_prem() const;
  const BasisMultiset& axioms() const;

  BasisMultiset def_basis() const { return multiset_sum(ord_prem(), def_rules()); }
  BasisMultiset str_basis() const { return multiset_sum(axioms(), str_rules()); }
  BasisMultiset basis() const { return multiset_sum(def_basis(), str_basis()); }
  BasisMultiset rules() const { return multiset_sum(str_rules(), def_rules()); }
  BasisMultiset prem() const { return multiset_sum(axioms(), ord_prem()); }

  /// Strict iff it uses no defeasible rule and no ordinary premise.
  bool is_strict() const { return def_rules().empty() && ord_prem().empty(); }

  /// Number of rule applications, counting repeats.
  std::size_t rule_applications() const { return def_rules().size() + str_rules().size(); }

  const std::string& key() const;
  const std::string& signature() const;

  /// Identity of the underlying node; stable for the lifetime of the tree.
  const void* node_id() const { return node_.get(); }

  friend bool operator==(const Argument& a, const Argument& b) { return a.key() == b.key(); }

 private:
  explicit Argument(std::shared_ptr<const detail::ArgumentNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::ArgumentNode> node_;

  friend Argument make_premise(const WeightedTheory&, const Literal&);
  friend class ArgumentBuilder;
};

/// Builds the premise argument for `l`. Throws ArgumentError when `l` is not
/// in the knowledge base or has no weight.
Argument make_premise(const WeightedTheory& t, const Literal& l);

/// Applies `rule` to `ants`. The conclusions of `ants` must equal the rule's
/// antecedent set exactly. The result must be well formed: the conclusions of
/// its subarguments are indirectly consistent under the theory's strict rules,
/// and no two distinct non-strict subarguments share a conclusion. Throws
/// ArgumentError otherwise.
Argument make_inference(const WeightedTheory& t, const InferenceRule& rule, std::span<const Argument> ants);

/// Non-throwing variant of make_inference.
struct InferenceResult {
  std::optional<Argument> argument;
  ArgumentErrc error{};
  std::string message;
  bool ok() const { return argument.has_value(); }
};
InferenceResult try_make_inference(const WeightedTheory& t, const InferenceRule& rule,
                                   std::span<const Argument> ants);

/// Every well-formed argument using at most `budget` rule applications,
/// deduplicated by structural key and ordered by key.
std::vector<Argument> enumerate_arguments(const WeightedTheory& t, std::size_t budget);

/// Arguments are isomorphic when they have the same shape and the same weights
/// at corresponding premises and rules.
bool is_isomorphic(const Argument& a, const Argument& b);

/// Canonical ordering used throughout: byte order of the structural key.
bool canonical_less(const Argument& a, const Argument& b);

/// Human-facing names for a list of arguments: alias `A1..An` in list order,
/// and a 12-hex-digit id derived from the signature, with an ordinal suffix
/// when isomorphic arguments collide.
struct ArgumentLabel {
  std::string alias;
  std::string id;
};
std::vector<ArgumentLabel> label_arguments(std::span<const Argument> args);

/// 64-bit FNV-1a; used for ids and input digests.
std::uint64_t fnv1a(std::string_view data);

}  // namespace argstr
