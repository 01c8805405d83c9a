#include "argstr/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace argstr {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng Rng::split(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ a) ^ (b * 0xd1b54a32d192ed03ULL)));
}

namespace {

Literal random_literal(Rng& rng, std::size_t atoms) {
  return Literal("l" + std::to_string(rng.below(atoms)), rng.chance(0.5));
}

double defeasible_weight(Rng& rng, const GeneratorConfig& cfg) {
  if (rng.chance(cfg.zero_mass)) return 0.0;
  const auto k = 1 + rng.below(static_cast<std::size_t>(cfg.weight_grid - 1));
  return static_cast<double>(k) / cfg.weight_grid;
}

std::size_t draw_arity(Rng& rng, const std::vector<double>& weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  double r = rng.unit() * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return weights.empty() ? 0 : weights.size() - 1;
}

WeightedTheory attempt(Rng& rng, const GeneratorConfig& cfg) {
  WeightedTheory t;
  const std::size_t literal_count = 2 * cfg.atoms;

  while (t.kb.axioms.size() < std::min(cfg.axioms, cfg.atoms)) {
    auto l = random_literal(rng, cfg.atoms);
    if (!t.kb.axioms.contains(complement(l))) t.add_axiom(l);
  }
  const std::size_t ordinary = std::min(cfg.ordinary, literal_count - t.kb.axioms.size());
  while (t.kb.ordinary.size() < ordinary) {
    auto l = random_literal(rng, cfg.atoms);
    if (!t.kb.axioms.contains(l) && !t.kb.ordinary.contains(l)) t.add_ordinary(l, defeasible_weight(rng, cfg));
  }

  // Antecedents lean towards literals that are already stated or derivable,
  // so that rules actually chain.
  std::vector<Literal> reachable(t.kb.axioms.begin(), t.kb.axioms.end());
  reachable.insert(reachable.end(), t.kb.ordinary.begin(), t.kb.ordinary.end());
  auto antecedent = [&] {
    if (!reachable.empty() && rng.chance(cfg.chain_bias)) return reachable[rng.below(reachable.size())];
    return random_literal(rng, cfg.atoms);
  };
  auto make_rule = [&](const std::string& id, RuleKind kind) {
    InferenceRule r;
    r.id = id;
    r.kind = kind;
    const auto arity = std::min(draw_arity(rng, cfg.arity_weights), literal_count - 1);
    while (r.antecedents.size() < arity) r.antecedents.insert(antecedent());
    do {
      r.consequent = random_literal(rng, cfg.atoms);
    } while (r.antecedents.contains(r.consequent));
    reachable.push_back(r.consequent);
    return r;
  };

  std::vector<RuleKind> kinds(cfg.strict_rules, RuleKind::Strict);
  kinds.insert(kinds.end(), cfg.defeasible_rules, RuleKind::Defeasible);
  for (std::size_t i = kinds.size(); i > 1; --i) std::swap(kinds[i - 1], kinds[rng.below(i)]);
  std::size_t ns = 0, nd = 0;
  for (auto kind : kinds) {
    if (kind == RuleKind::Strict) t.add_rule(make_rule("s" + std::to_string(++ns), kind), 1.0);
    else t.add_rule(make_rule("d" + std::to_string(++nd), kind), defeasible_weight(rng, cfg));
  }
  return t;
}

}  // namespace

WeightedTheory generate_theory(const GeneratorConfig& cfg) {
  if (cfg.atoms == 0) throw std::invalid_argument("generator needs at least one atom");
  if (cfg.weight_grid < 2) throw std::invalid_argument("weight grid must be at least 2");
  Rng rng(splitmix64(cfg.seed));
  // Strict rules can make the axioms indirectly inconsistent; redraw until not.
  for (int i = 0; i < 1000; ++i) {
    auto t = attempt(rng, cfg);
    if (validate_theory(t).ok()) return t;
  }
  throw std::runtime_error("could not generate a valid theory for this configuration");
}

}  // namespace argstr
