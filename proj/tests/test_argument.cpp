#include <algorithm>
#include <set>

#include "doctest.h"

#include "argstr/argument.hpp"
#include "argstr/dsl.hpp"
#include "argstr/generator.hpp"
#include "oracles.hpp"

using namespace argstr;

namespace {

WeightedTheory example3() {
  auto parsed = parse_theory(
      "axiom ax1: a1\n"
      "prem pr1: p1 w=0.5\n"
      "defeas d1: a1 => c1 w=0.25\n"
      "strict s1: c1, p1 -> C\n");
  REQUIRE(parsed.ok());
  return to_theory(*parsed.document);
}

Literal lit(std::string_view s) { return Literal::from_string(s); }

std::multiset<std::string> names(const BasisMultiset& m) {
  std::multiset<std::string> out;
  m.fold(0, [&](int acc, const BasisElement& e) {
    out.insert(e.name);
    return acc;
  });
  return out;
}

// Walks the tree directly to collect premise and rule occurrences.
void walk(const Argument& a, std::multiset<std::string>& prem, std::multiset<std::string>& rules) {
  if (a.is_premise()) {
    prem.insert(a.conclusion().str());
    return;
  }
  rules.insert(a.top_rule()->id);
  for (const auto& x : a.antecedents()) walk(x, prem, rules);
}

}  // namespace

TEST_CASE("premise leaves") {
  const auto t = example3();
  const auto a1 = make_premise(t, lit("a1"));
  CHECK(a1.is_premise());
  CHECK(a1.top_rule() == nullptr);
  CHECK(a1.is_axiom_premise());
  CHECK(names(a1.axioms()) == std::multiset<std::string>{"a1"});
  CHECK(a1.def_basis().empty());
  CHECK(a1.antecedents().empty());
  CHECK(a1.sub().size() == 1);
  CHECK(a1.is_strict());

  const auto a3 = make_premise(t, lit("p1"));
  CHECK(names(a3.ord_prem()) == std::multiset<std::string>{"p1"});
  CHECK(a3.axioms().empty());
  CHECK_FALSE(a3.is_strict());

  try {
    make_premise(t, lit("zzz"));
    FAIL("expected an error");
  } catch (const ArgumentError& e) {
    CHECK(e.code() == ArgumentErrc::LiteralNotInKnowledgeBase);
  }
}

TEST_CASE("building the four arguments of the worked example") {
  const auto t = example3();
  const auto a1 = make_premise(t, lit("a1"));
  const auto a3 = make_premise(t, lit("p1"));
  const auto a2 = make_inference(t, *t.find_rule("d1"), std::vector{a1});
  const std::vector<Argument> ants{a2, a3};
  const auto a4 = make_inference(t, *t.find_rule("s1"), ants);

  CHECK(a4.key() == "s1[d1[a1],p1]");
  CHECK(a4.conclusion() == lit("C"));
  CHECK(a4.top_rule()->id == "s1");
  CHECK(a4.weight() == 1.0);
  CHECK(names(a4.basis()) == std::multiset<std::string>{"a1", "d1", "p1", "s1"});
  CHECK(names(a4.prem()) == std::multiset<std::string>{"a1", "p1"});
  CHECK(names(a4.rules()) == std::multiset<std::string>{"d1", "s1"});
  CHECK(names(a4.def_basis()) == std::multiset<std::string>{"d1", "p1"});
  CHECK(names(a4.str_basis()) == std::multiset<std::string>{"a1", "s1"});
  CHECK(a4.sub().size() == 4);
  CHECK(a1.is_strict());
  CHECK_FALSE(a2.is_strict());
  CHECK_FALSE(a4.is_strict());

  std::multiset<std::string> prem, rules;
  walk(a4, prem, rules);
  CHECK(prem == names(a4.prem()));
  CHECK(rules == names(a4.rules()));
}

TEST_CASE("inference errors") {
  const auto t = example3();
  const auto a1 = make_premise(t, lit("a1"));
  const auto p1 = make_premise(t, lit("p1"));

  SUBCASE("wrong antecedent") {
    auto r = try_make_inference(t, *t.find_rule("d1"), std::vector{p1});
    CHECK_FALSE(r.ok());
    CHECK(r.error == ArgumentErrc::AntecedentMismatch);
  }
  SUBCASE("missing antecedent") {
    auto a2 = make_inference(t, *t.find_rule("d1"), std::vector{a1});
    auto r = try_make_inference(t, *t.find_rule("s1"), std::vector{a2});
    CHECK(r.error == ArgumentErrc::AntecedentMismatch);
  }
  SUBCASE("two arguments for the same antecedent") {
    auto r = try_make_inference(t, *t.find_rule("d1"), std::vector{a1, a1});
    CHECK(r.error == ArgumentErrc::AntecedentMismatch);
  }
  SUBCASE("throwing variant carries the code") {
    CHECK_THROWS_AS(make_inference(t, *t.find_rule("d1"), std::vector{p1}), ArgumentError);
  }
}

TEST_CASE("an inconsistent chain is rejected") {
  WeightedTheory t;
  t.add_ordinary(lit("p"), 0.5);
  t.add_rule({"d1", {lit("p")}, lit("q"), RuleKind::Defeasible}, 0.5);
  t.add_rule({"d2", {lit("q")}, lit("~p"), RuleKind::Defeasible}, 0.5);
  const auto p = make_premise(t, lit("p"));
  const auto q = make_inference(t, *t.find_rule("d1"), std::vector{p});
  const auto r = try_make_inference(t, *t.find_rule("d2"), std::vector{q});
  CHECK(r.error == ArgumentErrc::InconsistentSubarguments);
  CHECK_FALSE(oracle::brute_consistent({lit("p"), lit("q"), lit("~p")}, t.rules));
}

TEST_CASE("two non-strict subarguments may not share a conclusion") {
  WeightedTheory t;
  t.add_ordinary(lit("p"), 0.5);
  t.add_ordinary(lit("q"), 0.5);
  t.add_rule({"d1", {lit("p")}, lit("q"), RuleKind::Defeasible}, 0.5);
  t.add_rule({"s1", {lit("q"), lit("p")}, lit("r"), RuleKind::Strict}, 1.0);
  t.add_rule({"s2", {lit("r"), lit("q")}, lit("z"), RuleKind::Strict}, 1.0);
  const auto p = make_premise(t, lit("p"));
  const auto q = make_premise(t, lit("q"));
  const auto dq = make_inference(t, *t.find_rule("d1"), std::vector{p});
  const auto r = make_inference(t, *t.find_rule("s1"), std::vector{p, dq});
  // r uses d1[p] for q; pairing it with the premise q gives two arguments for q.
  auto bad = try_make_inference(t, *t.find_rule("s2"), std::vector{r, q});
  CHECK(bad.error == ArgumentErrc::DuplicateNonStrictConclusion);
  auto good = try_make_inference(t, *t.find_rule("s2"), std::vector{r, dq});
  CHECK(good.ok());
}

TEST_CASE("enumeration of small theories") {
  SUBCASE("one premise and one rule") {
    WeightedTheory t;
    t.add_ordinary(lit("p"), 0.5);
    t.add_rule({"d", {lit("p")}, lit("q"), RuleKind::Defeasible}, 0.5);
    const auto args = enumerate_arguments(t, 1);
    REQUIRE(args.size() == 2);
    CHECK(args[0].key() == "d[p]");
    CHECK(args[1].key() == "p");
  }
  SUBCASE("worked example at budget 2") {
    const auto t = example3();
    const auto args = enumerate_arguments(t, 2);
    std::vector<std::string> keys;
    for (const auto& a : args) keys.push_back(a.key());
    CHECK(keys == std::vector<std::string>{"a1", "d1[a1]", "p1", "s1[d1[a1],p1]"});
    CHECK(oracle::brute_arguments(t, 2) == std::set<std::string>(keys.begin(), keys.end()));
    const auto labels = label_arguments(args);
    CHECK(labels[0].alias == "A1");
    CHECK(labels[3].alias == "A4");
    CHECK(labels[0].id.size() == 12);
  }
  SUBCASE("budget 0 gives exactly the premises") {
    const auto t = example3();
    const auto args = enumerate_arguments(t, 0);
    CHECK(args.size() == 2);
    for (const auto& a : args) CHECK(a.is_premise());
  }
}

TEST_CASE("enumeration is monotone in the budget and every subargument is well formed") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    const auto t = generate_theory(cfg);
    std::set<std::string> prev;
    for (std::size_t b = 0; b <= 4; ++b) {
      const auto args = enumerate_arguments(t, b);
      std::set<std::string> cur;
      for (const auto& a : args) {
        cur.insert(a.key());
        CHECK(a.rule_applications() <= b);
        CHECK(a.basis().size() == a.prem().size() + a.rules().size());
        CHECK(a.basis() == multiset_sum(a.def_basis(), a.str_basis()));
        CHECK(a.basis().size() == a.axioms().size() + a.ord_prem().size() + a.str_rules().size() +
                                      a.def_rules().size());
      }
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      if (b == 0)
        for (const auto& a : args) CHECK(a.is_premise());
      // Every subargument of an enumerated argument is enumerated at the same budget.
      for (const auto& a : args)
        for (const auto& s : a.sub()) CHECK(cur.contains(s.key()));
      CHECK(std::is_sorted(args.begin(), args.end(), canonical_less));
      prev = std::move(cur);
    }
  }
}

TEST_CASE("enumeration matches the exhaustive generator") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.strict_rules = 1;
    cfg.defeasible_rules = 2;
    const auto t = generate_theory(cfg);
    std::set<std::string> keys;
    for (const auto& a : enumerate_arguments(t, 4)) keys.insert(a.key());
    CHECK(keys == oracle::brute_arguments(t, 4));
  }
}

TEST_CASE("isomorphism") {
  const auto t = example3();
  const auto args = enumerate_arguments(t, 2);
  for (const auto& a : args) CHECK(is_isomorphic(a, a));
  CHECK_FALSE(is_isomorphic(args[1], args[2]));

  WeightedTheory u;
  u.add_ordinary(lit("x"), 0.5);
  CHECK(is_isomorphic(make_premise(u, lit("x")), args[2]));
}

TEST_CASE("isomorphism is an equivalence that agrees with the backtracking matcher") {
  std::vector<Argument> pool;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.weight_grid = 4;  // coarse weights make isomorphic pairs common
    for (const auto& a : enumerate_arguments(generate_theory(cfg), 3)) pool.push_back(a);
  }
  Rng rng(9);
  std::size_t positives = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto& a = pool[rng.below(pool.size())];
    const auto& b = pool[rng.below(pool.size())];
    const auto& c = pool[rng.below(pool.size())];
    const bool ab = is_isomorphic(a, b);
    REQUIRE(ab == oracle::backtrack_isomorphic(a, b));
    CHECK(ab == (a.signature() == b.signature()));
    CHECK(ab == is_isomorphic(b, a));
    if (ab && is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
    positives += ab;
  }
  CHECK(positives > 100);
}
