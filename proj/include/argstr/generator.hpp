#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "argstr/theory.hpp"

namespace argstr {

/// Small deterministic RNG. Streams are derived with splitmix64 so that a
/// (seed, trial, stream) triple always yields the same sequence regardless of
/// which other streams were drawn.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng split(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

  std::uint64_t next();
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  std::size_t atoms = 4;
  std::size_t strict_rules = 3;
  std::size_t defeasible_rules = 5;
  std::size_t axioms = 2;
  std::size_t ordinary = 4;
  /// Relative frequency of antecedent-set sizes 0, 1, 2, ...
  std::vector<double> arity_weights{0.1, 0.5, 0.3, 0.1};
  /// Probability that an antecedent is drawn from literals already stated as
  /// premises or concluded by earlier rules.
  double chain_bias = 0.8;
  /// Probability that a defeasible rule or ordinary premise weighs exactly 0.
  double zero_mass = 0.05;
  /// Non-zero defeasible weights are k / weight_grid for k in [1, weight_grid).
  int weight_grid = 1000;
};

/// Random theory over atoms `l0 .. l{n-1}`. Deterministic in `cfg.seed` and
/// always passes validate_theory. Strict rules and axioms weigh 1.
WeightedTheory generate_theory(const GeneratorConfig& cfg);

}  // namespace argstr
