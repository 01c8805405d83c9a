#pragma once

// Independent reference implementations used to cross-check the library.
// They are deliberately naive: exhaustive search, no caching, no sharing of
// code paths with src/.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "argstr/argument.hpp"
#include "argstr/theory.hpp"

namespace oracle {

/// Least closed superset of `s`, found as the intersection of every closed
/// superset drawn from the power set of the literals that occur.
argstr::LiteralSet brute_closure(const argstr::LiteralSet& s, const std::vector<argstr::InferenceRule>& rules);

bool brute_consistent(const argstr::LiteralSet& s, const std::vector<argstr::InferenceRule>& rules);

/// Inference tree built from the definition: premise leaves plus rule
/// applications, checked for well-formedness from scratch.
struct Tree {
  argstr::Literal conclusion;
  const argstr::InferenceRule* rule = nullptr;  // null for premise leaves
  std::vector<Tree> children;

  std::string key() const;
  std::size_t rule_count() const;
  bool non_strict(const argstr::WeightedTheory& t) const;
  void collect(std::vector<const Tree*>& out) const;
};

/// Every well-formed argument with at most `budget` rule applications,
/// found by saturating all rule applications over all known arguments.
/// Returned as structural keys.
std::set<std::string> brute_arguments(const argstr::WeightedTheory& t, std::size_t budget);

/// Backtracking search for a weight-preserving bijection between trees.
bool backtrack_isomorphic(const argstr::Argument& a, const argstr::Argument& b);

/// Hamacher product written out by cases.
double hamacher(double x, double y);

/// Positive root of x = 1 / (1 + x).
double golden_fixed_point();

}  // namespace oracle
