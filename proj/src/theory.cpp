#include "argstr/theory.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace argstr {

Literal Literal::from_string(std::string_view text) {
  bool neg = false;
  if (!text.empty() && text.front() == '~') {
    neg = true;
    text.remove_prefix(1);
  }
  return Literal{std::string(text), neg};
}

Literal complement(const Literal& l) { return Literal{l.atom, !l.negated}; }

const InferenceRule* WeightedTheory::find_rule(std::string_view id) const {
  auto it = std::find_if(rules.begin(), rules.end(), [&](const InferenceRule& r) { return r.id == id; });
  return it == rules.end() ? nullptr : &*it;
}

std::optional<double> WeightedTheory::rule_weight(std::string_view id) const {
  auto it = rule_weights.find(std::string(id));
  if (it == rule_weights.end()) return std::nullopt;
  return it->second;
}

std::optional<double> WeightedTheory::premise_weight(const Literal& l) const {
  auto it = premise_weights.find(l);
  if (it == premise_weights.end()) return std::nullopt;
  return it->second;
}

std::vector<InferenceRule> WeightedTheory::strict_rules() const {
  std::vector<InferenceRule> out;
  std::copy_if(rules.begin(), rules.end(), std::back_inserter(out),
               [](const InferenceRule& r) { return r.is_strict(); });
  return out;
}

void WeightedTheory::add_rule(InferenceRule rule, double weight) {
  if (find_rule(rule.id) != nullptr) throw std::invalid_argument("duplicate rule id '" + rule.id + "'");
  rule_weights[rule.id] = weight;
  rules.push_back(std::move(rule));
}

void WeightedTheory::add_axiom(const Literal& l) {
  kb.axioms.insert(l);
  premise_weights[l] = 1.0;
}

void WeightedTheory::add_ordinary(const Literal& l, double weight) {
  kb.ordinary.insert(l);
  premise_weights[l] = weight;
}

LiteralSet strict_closure(const LiteralSet& s, std::span<const InferenceRule> rules) {
  LiteralSet closure = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (!r.is_strict() || closure.contains(r.consequent)) continue;
      if (std::includes(closure.begin(), closure.end(), r.antecedents.begin(), r.antecedents.end())) {
        closure.insert(r.consequent);
        changed = true;
      }
    }
  }
  return closure;
}

bool is_directly_consistent(const LiteralSet& s) {
  return std::none_of(s.begin(), s.end(), [&](const Literal& l) { return s.contains(complement(l)); });
}

bool is_indirectly_consistent(const LiteralSet& s, std::span<const InferenceRule> rules) {
  return is_directly_consistent(strict_closure(s, rules));
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::DuplicateRuleId: return "duplicate-rule-id";
    case Violation::StrictRuleWeightNotOne: return "strict-rule-weight-not-one";
    case Violation::DefeasibleRuleWeightOutOfRange: return "defeasible-rule-weight-out-of-range";
    case Violation::AxiomWeightNotOne: return "axiom-weight-not-one";
    case Violation::OrdinaryWeightOutOfRange: return "ordinary-weight-out-of-range";
    case Violation::AxiomOrdinaryOverlap: return "axiom-ordinary-overlap";
    case Violation::AxiomsIndirectlyInconsistent: return "axioms-indirectly-inconsistent";
    case Violation::MissingWeight: return "missing-weight";
    case Violation::DanglingWeight: return "dangling-weight";
    case Violation::EmptyAtom: return "empty-atom";
  }
  return "unknown";
}

bool ValidationReport::has(Violation v) const { return count(v) > 0; }

std::size_t ValidationReport::count(Violation v) const {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [&](const ValidationIssue& i) { return i.code == v; }));
}

namespace {

std::string fmt_weight(double w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

}  // namespace

ValidationReport validate_theory(const WeightedTheory& t) {
  ValidationReport report;
  auto flag = [&](Violation v, std::string msg) { report.issues.push_back({v, std::move(msg)}); };

  auto check_literal = [&](const Literal& l, std::string_view where) {
    if (l.atom.empty()) flag(Violation::EmptyAtom, "empty atom in " + std::string(where));
  };

  std::set<std::string> seen_ids;
  for (const auto& r : t.rules) {
    if (!seen_ids.insert(r.id).second) flag(Violation::DuplicateRuleId, "rule id '" + r.id + "' is used more than once");
    for (const auto& a : r.antecedents) check_literal(a, "rule '" + r.id + "'");
    check_literal(r.consequent, "rule '" + r.id + "'");

    auto w = t.rule_weight(r.id);
    if (!w) {
      flag(Violation::MissingWeight, "rule '" + r.id + "' has no weight");
    } else if (r.is_strict()) {
      if (*w != 1.0)
        flag(Violation::StrictRuleWeightNotOne, "strict rule '" + r.id + "' must weigh exactly 1 (got " + fmt_weight(*w) + ")");
    } else if (!(*w >= 0.0 && *w < 1.0)) {
      flag(Violation::DefeasibleRuleWeightOutOfRange,
           "defeasible rule '" + r.id + "' weight must lie in [0,1) (got " + fmt_weight(*w) + ")");
    }
  }
  for (const auto& [id, _] : t.rule_weights)
    if (t.find_rule(id) == nullptr) flag(Violation::DanglingWeight, "weight given for unknown rule '" + id + "'");

  for (const auto& a : t.kb.axioms) {
    check_literal(a, "axioms");
    auto w = t.premise_weight(a);
    if (!w)
      flag(Violation::MissingWeight, "axiom '" + a.str() + "' has no weight");
    else if (*w != 1.0)
      flag(Violation::AxiomWeightNotOne, "axiom '" + a.str() + "' must weigh exactly 1 (got " + fmt_weight(*w) + ")");
    if (t.kb.ordinary.contains(a))
      flag(Violation::AxiomOrdinaryOverlap, "'" + a.str() + "' is both an axiom and an ordinary premise");
  }
  for (const auto& p : t.kb.ordinary) {
    check_literal(p, "ordinary premises");
    if (t.kb.axioms.contains(p)) continue;  // weight already judged as an axiom
    auto w = t.premise_weight(p);
    if (!w)
      flag(Violation::MissingWeight, "ordinary premise '" + p.str() + "' has no weight");
    else if (!(*w >= 0.0 && *w < 1.0))
      flag(Violation::OrdinaryWeightOutOfRange,
           "ordinary premise '" + p.str() + "' weight must lie in [0,1) (got " + fmt_weight(*w) + ")");
  }
  for (const auto& [l, _] : t.premise_weights)
    if (!t.kb.axioms.contains(l) && !t.kb.ordinary.contains(l))
      flag(Violation::DanglingWeight, "weight given for '" + l.str() + "', which is not a premise");

  if (!is_indirectly_consistent(t.kb.axioms, t.rules))
    flag(Violation::AxiomsIndirectlyInconsistent, "axioms are indirectly inconsistent under the strict rules");

  return report;
}

}  // namespace argstr
