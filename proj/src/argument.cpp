#include "argstr/argument.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>

namespace argstr {

namespace detail {

struct ArgumentNode {
  Literal conclusion;
  std::optional<InferenceRule> rule;
  bool axiom = false;
  double weight = 0.0;
  std::vector<Argument> antecedents;
  std::vector<Argument> proper_subs;  // ordered by key, no duplicates
  BasisMultiset def_rules, str_rules, ord_prem, axioms;
  std::string key;
  std::string signature;
};

}  // namespace detail

namespace {

std::string hex_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", w);
  return buf;
}

}  // namespace

std::string_view to_string(ArgumentErrc e) {
  switch (e) {
    case ArgumentErrc::LiteralNotInKnowledgeBase: return "literal-not-in-kb";
    case ArgumentErrc::MissingWeight: return "missing-weight";
    case ArgumentErrc::UnknownRule: return "unknown-rule";
    case ArgumentErrc::AntecedentMismatch: return "antecedent-mismatch";
    case ArgumentErrc::InconsistentSubarguments: return "inconsistent-subarguments";
    case ArgumentErrc::DuplicateNonStrictConclusion: return "duplicate-nonstrict-conclusion";
  }
  return "unknown";
}

const Literal& Argument::conclusion() const { return node_->conclusion; }
const InferenceRule* Argument::top_rule() const { return node_->rule ? &*node_->rule : nullptr; }
double Argument::weight() const { return node_->weight; }
bool Argument::is_axiom_premise() const { return !node_->rule && node_->axiom; }
std::span<const Argument> Argument::antecedents() const { return node_->antecedents; }
const BasisMultiset& Argument::def_rules() const { return node_->def_rules; }
const BasisMultiset& Argument::str_rules() const { return node_->str_rules; }
const BasisMultiset& Argument::ord_prem() const { return node_->ord_prem; }
const BasisMultiset& Argument::axioms() const { return node_->axioms; }
const std::string& Argument::key() const { return node_->key; }
const std::string& Argument::signature() const { return node_->signature; }

std::vector<Argument> Argument::sub() const {
  std::vector<Argument> out = node_->proper_subs;
  auto pos = std::lower_bound(out.begin(), out.end(), *this,
                              [](const Argument& a, const Argument& b) { return a.key() < b.key(); });
  out.insert(pos, *this);
  return out;
}

Argument make_premise(const WeightedTheory& t, const Literal& l) {
  const bool axiom = t.kb.axioms.contains(l);
  if (!axiom && !t.kb.ordinary.contains(l))
    throw ArgumentError(ArgumentErrc::LiteralNotInKnowledgeBase, "'" + l.str() + "' is not in the knowledge base");
  auto w = t.premise_weight(l);
  if (!w) throw ArgumentError(ArgumentErrc::MissingWeight, "premise '" + l.str() + "' has no weight");

  auto node = std::make_shared<detail::ArgumentNode>();
  node->conclusion = l;
  node->axiom = axiom;
  node->weight = *w;
  BasisElement el{axiom ? BasisElement::Kind::Axiom : BasisElement::Kind::OrdinaryPremise, l.str(), *w};
  (axiom ? node->axioms : node->ord_prem).add(el);
  node->key = l.str();
  node->signature = "P" + hex_weight(*w);
  return Argument(std::move(node));
}

class ArgumentBuilder {
 public:
  static InferenceResult infer(const WeightedTheory& t, const InferenceRule& rule, std::span<const Argument> ants) {
    auto fail = [](ArgumentErrc e, std::string msg) {
      InferenceResult r;
      r.error = e;
      r.message = std::move(msg);
      return r;
    };

    auto w = t.rule_weight(rule.id);
    if (!w) return fail(ArgumentErrc::MissingWeight, "rule '" + rule.id + "' has no weight");

    // Antecedents are a set keyed by conclusion and must match the rule exactly.
    std::map<Literal, Argument> by_conclusion;
    for (const auto& a : ants) {
      if (!by_conclusion.emplace(a.conclusion(), a).second)
        return fail(ArgumentErrc::AntecedentMismatch,
                    "two antecedents conclude '" + a.conclusion().str() + "' for rule '" + rule.id + "'");
    }
    if (by_conclusion.size() != rule.antecedents.size() ||
        !std::all_of(rule.antecedents.begin(), rule.antecedents.end(),
                     [&](const Literal& l) { return by_conclusion.contains(l); }))
      return fail(ArgumentErrc::AntecedentMismatch, "antecedent conclusions do not match rule '" + rule.id + "'");

    auto node = std::make_shared<detail::ArgumentNode>();
    node->conclusion = rule.consequent;
    node->rule = rule;
    node->weight = *w;

    std::map<std::string, Argument> subs;
    std::vector<std::string> child_sigs;
    std::string key = rule.id + "[";
    bool first = true;
    for (const auto& [_, a] : by_conclusion) {
      node->antecedents.push_back(a);
      subs.emplace(a.key(), a);
      for (const auto& s : a.node_->proper_subs) subs.emplace(s.key(), s);
      node->def_rules = multiset_sum(node->def_rules, a.def_rules());
      node->str_rules = multiset_sum(node->str_rules, a.str_rules());
      node->ord_prem = multiset_sum(node->ord_prem, a.ord_prem());
      node->axioms = multiset_sum(node->axioms, a.axioms());
      child_sigs.push_back(a.signature());
      if (!first) key += ",";
      key += a.key();
      first = false;
    }
    key += "]";
    BasisElement el{rule.is_strict() ? BasisElement::Kind::StrictRule : BasisElement::Kind::DefeasibleRule, rule.id, *w};
    (rule.is_strict() ? node->str_rules : node->def_rules).add(el);

    std::sort(child_sigs.begin(), child_sigs.end());
    std::string sig = "R" + hex_weight(*w) + "(";
    for (std::size_t i = 0; i < child_sigs.size(); ++i) sig += (i ? "," : "") + child_sigs[i];
    sig += ")";
    node->key = std::move(key);
    node->signature = std::move(sig);
    for (auto& [_, s] : subs) node->proper_subs.push_back(s);

    const bool self_strict = node->def_rules.empty() && node->ord_prem.empty();

    // Well-formedness 1: conclusions of all subarguments, indirectly consistent.
    LiteralSet concs{node->conclusion};
    for (const auto& s : node->proper_subs) concs.insert(s.conclusion());
    if (!is_indirectly_consistent(concs, t.rules))
      return fail(ArgumentErrc::InconsistentSubarguments,
                  "subargument conclusions of '" + node->key + "' are indirectly inconsistent");

    // Well-formedness 2: non-strict subarguments with equal conclusions are equal.
    std::map<Literal, const std::string*> nonstrict;
    if (!self_strict) nonstrict.emplace(node->conclusion, &node->key);
    for (const auto& s : node->proper_subs) {
      if (s.is_strict()) continue;
      auto [it, inserted] = nonstrict.emplace(s.conclusion(), &s.key());
      if (!inserted && *it->second != s.key())
        return fail(ArgumentErrc::DuplicateNonStrictConclusion,
                    "'" + node->key + "' contains distinct non-strict subarguments for '" + s.conclusion().str() + "'");
    }

    InferenceResult ok;
    ok.argument = Argument(std::move(node));
    return ok;
  }
};

InferenceResult try_make_inference(const WeightedTheory& t, const InferenceRule& rule, std::span<const Argument> ants) {
  return ArgumentBuilder::infer(t, rule, ants);
}

Argument make_inference(const WeightedTheory& t, const InferenceRule& rule, std::span<const Argument> ants) {
  auto r = ArgumentBuilder::infer(t, rule, ants);
  if (!r.ok()) throw ArgumentError(r.error, r.message);
  return *r.argument;
}

bool canonical_less(const Argument& a, const Argument& b) { return a.key() < b.key(); }

namespace {

// Fills `chosen` with one argument per antecedent literal whose costs sum to
// exactly `remaining`, calling `emit` for each complete choice.
template <typename Emit>
void choose_antecedents(const std::vector<const std::vector<Argument>*>& pools, std::size_t index,
                        std::size_t remaining, std::vector<Argument>& chosen, Emit&& emit) {
  if (index == pools.size()) {
    if (remaining == 0) emit(chosen);
    return;
  }
  for (const auto& a : *pools[index]) {
    const auto cost = a.rule_applications();
    if (cost > remaining) break;  // pools are sorted by cost
    chosen.push_back(a);
    choose_antecedents(pools, index + 1, remaining - cost, chosen, emit);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Argument> enumerate_arguments(const WeightedTheory& t, std::size_t budget) {
  std::vector<Argument> all;
  std::map<Literal, std::vector<Argument>> by_conclusion;

  for (const auto* premises : {&t.kb.axioms, &t.kb.ordinary}) {
    for (const auto& l : *premises) {
      if (premises == &t.kb.ordinary && t.kb.axioms.contains(l)) continue;
      auto a = make_premise(t, l);
      by_conclusion[l].push_back(a);
      all.push_back(a);
    }
  }

  // Level c holds arguments with exactly c rule applications; their
  // antecedents jointly use c - 1, so all of them are already known.
  for (std::size_t cost = 1; cost <= budget; ++cost) {
    std::vector<Argument> level;
    for (const auto& rule : t.rules) {
      std::vector<const std::vector<Argument>*> pools;
      bool possible = true;
      for (const auto& l : rule.antecedents) {
        auto it = by_conclusion.find(l);
        if (it == by_conclusion.end()) {
          possible = false;
          break;
        }
        pools.push_back(&it->second);
      }
      if (!possible) continue;
      std::vector<Argument> chosen;
      choose_antecedents(pools, 0, cost - 1, chosen, [&](const std::vector<Argument>& ants) {
        auto r = try_make_inference(t, rule, ants);
        if (r.ok()) level.push_back(*r.argument);
      });
    }
    if (level.empty()) continue;
    for (const auto& a : level) {
      auto& pool = by_conclusion[a.conclusion()];
      pool.push_back(a);
      all.push_back(a);
    }
    for (auto& [_, pool] : by_conclusion)
      std::stable_sort(pool.begin(), pool.end(), [](const Argument& a, const Argument& b) {
        return a.rule_applications() < b.rule_applications();
      });
  }

  std::sort(all.begin(), all.end(), canonical_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool is_isomorphic(const Argument& a, const Argument& b) { return a.signature() == b.signature(); }

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<ArgumentLabel> label_arguments(std::span<const Argument> args) {
  std::vector<ArgumentLabel> out;
  std::map<std::string, int> seen;
  out.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(args[i].signature())));
    std::string id(buf, 12);
    int n = ++seen[id];
    if (n > 1) id += "-" + std::to_string(n);
    out.push_back({"A" + std::to_string(i + 1), std::move(id)});
  }
  return out;
}

}  // namespace argstr
