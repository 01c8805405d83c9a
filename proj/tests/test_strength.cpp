#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"

#include "argstr/dsl.hpp"
#include "argstr/generator.hpp"
#include "argstr/strength.hpp"
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

std::vector<Argument> corpus(std::size_t theories, std::size_t budget) {
  std::vector<Argument> out;
  for (std::uint64_t seed = 1; seed <= theories; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    for (auto& a : enumerate_arguments(generate_theory(cfg), budget)) out.push_back(std::move(a));
  }
  return out;
}

AggregationMethod agg(std::string_view name) { return std::get<AggregationMethod>(*find_method(name)); }

}  // namespace

TEST_CASE("direct strengths on the worked example") {
  const auto t = example3();
  const auto a = enumerate_arguments(t, 2);
  REQUIRE(a.size() == 4);
  CHECK(strength_sp(a[0]) == 1.0);
  CHECK(strength_sp(a[1]) == 0.25);
  CHECK(strength_sp(a[2]) == 0.5);
  CHECK(strength_sp(a[3]) == 0.125);
  CHECK(strength_wl(a[0]) == 1.0);
  CHECK(strength_wl(a[1]) == 0.25);
  CHECK(strength_wl(a[2]) == 0.5);
  CHECK(strength_wl(a[3]) == 0.25);
  CHECK(strength_sp_recursive(a[1]) == 0.25);
  CHECK(strength_sp_recursive(a[3]) == 0.125);
  CHECK(strength_wl_recursive(a[3]) == 0.25);
}

TEST_CASE("aggregation methods on the worked example") {
  const auto a4 = enumerate_arguments(example3(), 2)[3];
  CHECK(eval_aggregation(agg("prod-prod"), a4) == 0.125);
  CHECK(eval_aggregation(agg("min-min"), a4) == 0.25);
  // Hand evaluation: c1 gets f(0.25, g()) = 0.25, C gets f(1, g(0.25, 0.5)).
  const double inner = oracle::hamacher(0.25, 0.5);
  CHECK(eval_aggregation(agg("hamacher"), a4) == doctest::Approx(oracle::hamacher(1.0, inner)).epsilon(1e-15));
  CHECK(eval_aggregation(agg("hamacher"), a4) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(eval_aggregation(agg("lukasiewicz"), a4) == 0.0);
}

TEST_CASE("a zero-weight premise zeroes the product") {
  auto parsed = parse_theory("prem z: z w=0\nstrict s: z -> y\n");
  REQUIRE(parsed.ok());
  const auto t = to_theory(*parsed.document);
  for (const auto& a : enumerate_arguments(t, 1)) {
    CHECK(strength_sp(a) == 0.0);
    CHECK(strength_wl(a) == 0.0);
  }
}

TEST_CASE("recursive and direct forms agree on random arguments") {
  const auto args = corpus(150, 5);
  REQUIRE(args.size() > 1000);
  const auto msp = agg("prod-prod"), mwl = agg("min-min");
  for (const auto& a : args) {
    CHECK(std::abs(strength_sp(a) - strength_sp_recursive(a)) <= 1e-12);
    CHECK(std::abs(strength_wl(a) - strength_wl_recursive(a)) <= 1e-12);
    CHECK(std::abs(strength_sp(a) - eval_aggregation(msp, a)) <= 1e-12);
    CHECK(std::abs(strength_wl(a) - eval_aggregation(mwl, a)) <= 1e-12);
  }
}

TEST_CASE("strengths lie in the unit interval and strict arguments score 1") {
  const auto args = corpus(60, 4);
  std::vector<StrengthMethod> methods;
  for (const auto& n : registered_method_names()) methods.push_back(*find_method(n));
  for (const auto& a : args) {
    for (const auto& m : methods) {
      const double s = evaluate(m, a);
      CHECK(s >= 0.0);
      CHECK(s <= 1.0);
      if (a.is_strict()) CHECK(s == 1.0);
    }
  }
}

TEST_CASE("library functions by cases") {
  CHECK(fns::f_hamacher(0, 0) == 0.0);
  CHECK(fns::f_lukasiewicz(0.5, 0.5) == 0.0);
  CHECK(fns::f_lukasiewicz(0.75, 0.5) == 0.25);
  CHECK(fns::f_prod(0.5, 0.5) == 0.25);
  CHECK(fns::f_min(0.2, 0.7) == 0.2);
  const std::vector<double> none;
  CHECK(fns::g_min(none) == 1.0);
  CHECK(fns::g_prod(none) == 1.0);
  CHECK(fns::g_hamacher(none) == 1.0);
  CHECK(fns::g_lukasiewicz(none) == 1.0);
  const std::vector<double> one{0.3};
  CHECK(fns::g_hamacher(one) == 0.3);
  CHECK(fns::g_lukasiewicz(one) == 0.3);
  const std::vector<double> two{0.25, 0.5};
  CHECK(fns::g_lukasiewicz(two) == 0.0);
  CHECK(fns::g_hamacher(two) == doctest::Approx(oracle::hamacher(0.25, 0.5)).epsilon(1e-15));
  const std::vector<double> mean{0.5, 1.0};
  CHECK(fns::g_mean(mean) == 0.75);
}

TEST_CASE("t-norm laws on random inputs") {
  Rng rng(21);
  auto draw = [&] {
    const double r = rng.unit();
    return r < 0.1 ? 0.0 : r > 0.9 ? 1.0 : rng.unit();
  };
  for (const auto& name : combine_fn_names()) {
    CAPTURE(name);
    const auto f = *find_combine_fn(name);
    CHECK(f.certified);
    for (int trial = 0; trial < 3000; ++trial) {
      const double x = draw(), y = draw(), z = draw();
      const double y2 = std::min(1.0, y + rng.unit() * (1 - y));
      CHECK(std::abs(f(x, y) - f(y, x)) <= 1e-12);
      CHECK(std::abs(f(f(x, y), z) - f(x, f(y, z))) <= 1e-12);
      CHECK(f(x, y) <= f(x, y2) + 1e-12);
      CHECK(std::abs(f(x, 1.0) - x) <= 1e-12);
      CHECK(f(x, 0.0) == 0.0);
      CHECK(f(x, y) >= 0.0);
      CHECK(f(x, y) <= 1.0);
    }
  }
}

TEST_CASE("every library aggregate is symmetric") {
  Rng rng(4);
  for (const auto& name : aggregate_fn_names()) {
    CAPTURE(name);
    const auto g = *find_aggregate_fn(name);
    CHECK(sample_symmetry(g));
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<double> xs(1 + rng.below(5));
      for (auto& x : xs) x = rng.unit();
      const double base = g(xs);
      for (int k = 0; k < 4; ++k) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
        CHECK(std::abs(g(xs) - base) <= 1e-12);
      }
    }
  }
}

TEST_CASE("a non-symmetric aggregate is refused") {
  AggregateFn first{"first", [](std::span<const double> xs) { return xs.empty() ? 1.0 : xs.front(); }, false};
  CHECK_FALSE(sample_symmetry(first));
  CHECK_THROWS_AS(make_aggregation_method("bad", *find_combine_fn("prod"), first), std::invalid_argument);
  CHECK_NOTHROW(make_aggregation_method("ok", *find_combine_fn("prod"), *find_aggregate_fn("mean")));
}

TEST_CASE("method registry") {
  for (const auto& n : {"sp", "wl", "prod-prod", "min-min", "prod-min", "hamacher", "lukasiewicz"})
    CHECK(find_method(n).has_value());
  CHECK(find_method("prod:mean").has_value());
  CHECK(method_name(*find_method("sp")) == "sp");
  CHECK_FALSE(find_method("nope").has_value());
  CHECK_FALSE(find_method("prod:nope").has_value());
  CHECK_FALSE(find_method("mean:prod").has_value());
}

TEST_CASE("well-behavedness verdicts") {
  for (const auto* name : {"prod-prod", "min-min", "hamacher", "lukasiewicz", "prod-min"}) {
    CAPTURE(name);
    const auto v = check_well_behaved(agg(name));
    CHECK(v.overall == ClauseStatus::Certified);
    for (const auto& c : v.clauses) CHECK(c.status == ClauseStatus::Certified);

    // Without certificates the grid finds nothing to object to.
    auto grid = GridSpec::standard();
    grid.use_certificates = false;
    const auto sampled = check_well_behaved(agg(name), grid);
    CHECK(sampled.overall == ClauseStatus::NoViolationFound);
    for (const auto& c : sampled.clauses) CHECK(c.samples > 0);
  }

  const auto mean = check_well_behaved(agg("prod:mean"));
  CHECK(mean.overall == ClauseStatus::Falsified);
  CHECK(mean.clauses[6].status == ClauseStatus::Falsified);
  CHECK_FALSE(mean.clauses[6].witness.empty());
  // f = prod keeps its certificate.
  CHECK(mean.clauses[0].status == ClauseStatus::Certified);
  // The mean really does move when a 1 is appended.
  const std::vector<double> half{0.5}, half_one{0.5, 1.0};
  CHECK(fns::g_mean(half) != fns::g_mean(half_one));
}
