#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"

#include "argstr/generator.hpp"
#include "argstr/multiset.hpp"
#include "argstr/theory.hpp"
#include "oracles.hpp"

using namespace argstr;

namespace {

InferenceRule strict(std::string id, LiteralSet ants, Literal c) {
  return {std::move(id), std::move(ants), std::move(c), RuleKind::Strict};
}
InferenceRule defeasible(std::string id, LiteralSet ants, Literal c) {
  return {std::move(id), std::move(ants), std::move(c), RuleKind::Defeasible};
}

Literal lit(std::string_view s) { return Literal::from_string(s); }

WeightedTheory tweety() {
  WeightedTheory t;
  t.add_axiom(lit("bird"));
  t.add_rule(defeasible("fly", {lit("bird")}, lit("flies")), 0.95);
  t.add_rule(defeasible("yellow", {lit("bird")}, lit("yellow")), 0.05);
  t.add_rule(strict("animal", {lit("bird")}, lit("animal")), 1.0);
  return t;
}

// Random strict rules over atoms x0..x{n-1}; small enough for the power-set oracle.
std::vector<InferenceRule> random_rules(Rng& rng, std::size_t atoms, std::size_t count) {
  std::vector<InferenceRule> rules;
  auto pick = [&] { return Literal("x" + std::to_string(rng.below(atoms)), rng.chance(0.3)); };
  for (std::size_t i = 0; i < count; ++i) {
    LiteralSet ants;
    for (std::size_t k = rng.below(3); k > 0; --k) ants.insert(pick());
    Literal c = pick();
    ants.erase(c);
    rules.push_back({"r" + std::to_string(i), ants, c, rng.chance(0.8) ? RuleKind::Strict : RuleKind::Defeasible});
  }
  return rules;
}

LiteralSet random_set(Rng& rng, std::size_t atoms, std::size_t max) {
  LiteralSet s;
  for (std::size_t k = rng.below(max + 1); k > 0; --k)
    s.insert(Literal("x" + std::to_string(rng.below(atoms)), rng.chance(0.3)));
  return s;
}

bool subset(const LiteralSet& a, const LiteralSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST_CASE("complement flips the negation flag and is an involution") {
  CHECK(complement(lit("p")) == Literal("p", true));
  CHECK(complement(lit("~p")) == Literal("p", false));
  CHECK(complement(complement(lit("q"))) == lit("q"));
  CHECK(lit("~bird(tweety)").atom == "bird(tweety)");
  CHECK(lit("~p").str() == "~p");
}

TEST_CASE("strict closure") {
  SUBCASE("chained strict rules") {
    std::vector<InferenceRule> rules{strict("r1", {lit("a")}, lit("b")), strict("r2", {lit("b")}, lit("c"))};
    CHECK(strict_closure({lit("a")}, rules) == LiteralSet{lit("a"), lit("b"), lit("c")});
  }
  SUBCASE("defeasible rules never fire") {
    std::vector<InferenceRule> rules{defeasible("d", {lit("a")}, lit("b"))};
    CHECK(strict_closure({lit("a")}, rules) == LiteralSet{lit("a")});
  }
  SUBCASE("an empty antecedent set makes a fact") {
    std::vector<InferenceRule> rules{strict("t", {}, lit("t"))};
    const LiteralSet expected{lit("t")};
    CHECK(strict_closure({}, rules) == expected);
    CHECK(oracle::brute_closure({}, rules) == expected);
  }
}

TEST_CASE("strict closure agrees with the power-set oracle and is a closure operator") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rules = random_rules(rng, 4, 1 + rng.below(4));
    const auto s = random_set(rng, 4, 3);
    const auto bigger = [&] {
      auto b = s;
      for (const auto& l : random_set(rng, 4, 2)) b.insert(l);
      return b;
    }();
    const auto cl = strict_closure(s, rules);
    REQUIRE(cl == oracle::brute_closure(s, rules));
    CHECK(subset(s, cl));
    CHECK(strict_closure(cl, rules) == cl);
    CHECK(subset(cl, strict_closure(bigger, rules)));
  }
}

TEST_CASE("direct and indirect consistency") {
  CHECK(is_directly_consistent({lit("a"), lit("b")}));
  CHECK_FALSE(is_directly_consistent({lit("a"), lit("~a")}));
  CHECK(is_directly_consistent({}));

  std::vector<InferenceRule> rules{strict("r1", {lit("a"), lit("b")}, lit("c")), strict("r2", {lit("c")}, lit("~a"))};
  CHECK(strict_closure({lit("a"), lit("b")}, rules) == LiteralSet{lit("a"), lit("b"), lit("c"), lit("~a")});
  CHECK_FALSE(is_indirectly_consistent({lit("a"), lit("b")}, rules));
  CHECK(is_indirectly_consistent({lit("a")}, {}));
  CHECK_FALSE(is_indirectly_consistent({lit("a"), lit("~a")}, {}));

  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rules_r = random_rules(rng, 4, 3);
    const auto s = random_set(rng, 4, 3);
    const bool indirect = is_indirectly_consistent(s, rules_r);
    CHECK(indirect == oracle::brute_consistent(s, rules_r));
    if (indirect) CHECK(is_directly_consistent(s));
  }
}

TEST_CASE("validate_theory accepts the Tweety theory") {
  const auto report = validate_theory(tweety());
  CHECK(report.ok());
}

TEST_CASE("validate_theory reports each broken invariant") {
  SUBCASE("strict rule weighted 0.9") {
    auto t = tweety();
    t.rule_weights["animal"] = 0.9;
    const auto r = validate_theory(t);
    CHECK(r.issues.size() == 1);
    CHECK(r.has(Violation::StrictRuleWeightNotOne));
  }
  SUBCASE("axioms a and ~a") {
    WeightedTheory t;
    t.add_axiom(lit("a"));
    t.add_axiom(lit("~a"));
    CHECK(validate_theory(t).has(Violation::AxiomsIndirectlyInconsistent));
  }
  SUBCASE("axioms inconsistent only through a strict rule") {
    auto t = tweety();
    t.add_axiom(lit("~animal"));
    CHECK(validate_theory(t).has(Violation::AxiomsIndirectlyInconsistent));
  }
  SUBCASE("defeasible rule weighted 1") {
    auto t = tweety();
    t.rule_weights["fly"] = 1.0;
    CHECK(validate_theory(t).has(Violation::DefeasibleRuleWeightOutOfRange));
  }
  SUBCASE("negative defeasible weight") {
    auto t = tweety();
    t.rule_weights["fly"] = -0.1;
    CHECK(validate_theory(t).has(Violation::DefeasibleRuleWeightOutOfRange));
  }
  SUBCASE("axiom weight below 1") {
    auto t = tweety();
    t.premise_weights[lit("bird")] = 0.5;
    CHECK(validate_theory(t).has(Violation::AxiomWeightNotOne));
  }
  SUBCASE("ordinary premise weighted 1") {
    auto t = tweety();
    t.add_ordinary(lit("p"), 1.0);
    CHECK(validate_theory(t).has(Violation::OrdinaryWeightOutOfRange));
  }
  SUBCASE("axiom also listed as ordinary") {
    auto t = tweety();
    t.kb.ordinary.insert(lit("bird"));
    CHECK(validate_theory(t).has(Violation::AxiomOrdinaryOverlap));
  }
  SUBCASE("weight without a rule") {
    auto t = tweety();
    t.rule_weights["ghost"] = 0.5;
    CHECK(validate_theory(t).has(Violation::DanglingWeight));
  }
  SUBCASE("weight without a premise") {
    auto t = tweety();
    t.premise_weights[lit("ghost")] = 0.5;
    CHECK(validate_theory(t).has(Violation::DanglingWeight));
  }
  SUBCASE("rule without a weight") {
    auto t = tweety();
    t.rule_weights.erase("yellow");
    CHECK(validate_theory(t).has(Violation::MissingWeight));
  }
  SUBCASE("duplicate rule id") {
    auto t = tweety();
    t.rules.push_back(defeasible("fly", {lit("bird")}, lit("x")));
    CHECK(validate_theory(t).has(Violation::DuplicateRuleId));
  }
  SUBCASE("add_rule refuses a duplicate id") {
    auto t = tweety();
    CHECK_THROWS_AS(t.add_rule(defeasible("fly", {}, lit("x")), 0.5), std::invalid_argument);
  }
}

TEST_CASE("validator accepts generated theories and rejects one-invariant mutations") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    const auto t = generate_theory(cfg);
    REQUIRE(validate_theory(t).ok());

    Rng rng(seed);
    auto m = t;
    switch (rng.below(4)) {
      case 0: {
        const auto& r = m.rules[rng.below(m.rules.size())];
        m.rule_weights[r.id] = r.is_strict() ? 0.5 : 1.0;
        break;
      }
      case 1: m.premise_weights[*m.kb.axioms.begin()] = 0.999; break;
      case 2: m.kb.ordinary.insert(*m.kb.axioms.begin()); break;
      default: m.add_axiom(complement(*m.kb.axioms.begin())); break;
    }
    CHECK_FALSE(validate_theory(m).ok());
  }
}

TEST_CASE("multiset operations") {
  using M = Multiset<char>;
  CHECK(multiset_sum(M{'a', 'a', 'b'}, M{'a', 'b'}) == M{'a', 'a', 'a', 'b', 'b'});
  CHECK(multiset_union(M{'a', 'a', 'b'}, M{'a', 'b', 'b'}) == M{'a', 'a', 'b', 'b'});
  CHECK(M{'a', 'a', 'b'}.support() == std::set<char>{'a', 'b'});
  CHECK(M{'a', 'a', 'b'}.size() == 3);
  CHECK(M{'a', 'a', 'b'}.distinct() == 2);

  const std::map<char, double> s{{'b', 0.5}, {'c', 0.2}};
  const double prod = M{'b', 'b', 'c'}.fold(1.0, [&](double acc, char x) { return acc * s.at(x); });
  CHECK(prod == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("multiset algebraic laws on random bags") {
  using M = Multiset<int>;
  Rng rng(3);
  auto bag = [&] {
    M m;
    for (std::size_t k = rng.below(6); k > 0; --k) m.add(static_cast<int>(rng.below(4)), 1 + rng.below(3));
    return m;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const M a = bag(), b = bag(), c = bag();
    CHECK(multiset_sum(a, b) == multiset_sum(b, a));
    CHECK(multiset_sum(multiset_sum(a, b), c) == multiset_sum(a, multiset_sum(b, c)));
    CHECK(multiset_union(a, b) == multiset_union(b, a));
    CHECK(multiset_union(multiset_union(a, b), c) == multiset_union(a, multiset_union(b, c)));
    CHECK(multiset_union(a, a) == a);
    CHECK(multiset_sum(a, b).size() == a.size() + b.size());
    for (int x = 0; x < 4; ++x)
      CHECK(multiset_union(a, b).multiplicity(x) == std::max(a.multiplicity(x), b.multiplicity(x)));
  }
}
