#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "argstr/strength.hpp"
#include "argstr/theory.hpp"

namespace argstr {

struct GraphNode {
  std::string id;
  double weight = 1.0;  // base weight sigma
};

struct GraphEdge {
  std::string from;
  std::string to;
  double weight = 1.0;  // attack weight pi
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments with base weights and weighted attacks. Validated on
/// construction: non-empty, unique ids, weights in [0,1], edges between
/// existing nodes. Throws GraphError otherwise.
class WeightedArgumentationGraph {
 public:
  WeightedArgumentationGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges);

  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t index(const std::string& id) const;  // throws GraphError
  /// Attacker indices of node i (duplicates kept).
  const std::vector<std::size_t>& attackers(std::size_t i) const { return attackers_[i]; }

 private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> attackers_;
};

/// Least fixed point of the defence operator; attack weights are ignored.
std::set<std::string> grounded_extension(const WeightedArgumentationGraph& g);

struct DegreeAssignment {
  std::map<std::string, double> degrees;
  std::size_t iterations = 0;
  double residual = 0.0;  // infinity norm of the last update
};

class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(const std::string& what, DegreeAssignment partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const DegreeAssignment& partial() const { return partial_; }

 private:
  DegreeAssignment partial_;
};

class NonUnitAttackWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IterationOptions {
  double eps = 1e-12;
  std::size_t max_iter = 10000;
};

/// Weighted h-categorizer degrees by synchronous (Jacobi) iteration of
/// f(x) = sigma(x) / (1 + sum of attacker values), starting from sigma. Stops
/// once the largest change drops below `eps`. Requires every attack weight to
/// be exactly 1 (throws NonUnitAttackWeight); throws NoConvergence carrying
/// the last iterate when `max_iter` is exhausted.
DegreeAssignment h_categorizer_degrees(const WeightedArgumentationGraph& g, const IterationOptions& opts = {});

/// Attack between arguments named by alias (`A3`) or id, as produced by
/// label_arguments over enumerate_arguments.
struct ArgumentAttack {
  std::string from;
  std::string to;
  double weight = 1.0;
};

/// Graph over the enumerated arguments of `t` with base weights equal to
/// their strengths under `m`. Node ids are the argument aliases. Throws
/// GraphError for an attack naming an unknown argument.
WeightedArgumentationGraph seed_graph_from_theory(const WeightedTheory& t, const std::vector<ArgumentAttack>& attacks,
                                                  const StrengthMethod& m, std::size_t budget);

}  // namespace argstr
