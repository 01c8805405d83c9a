#include "argstr/semantics.hpp"

#include <algorithm>
#include <cmath>

#include "argstr/argument.hpp"

namespace argstr {

WeightedArgumentationGraph::WeightedArgumentationGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (nodes_.empty()) throw GraphError("graph has no arguments");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.id.empty()) throw GraphError("argument with empty id");
    if (!(n.weight >= 0.0 && n.weight <= 1.0))
      throw GraphError("argument '" + n.id + "' has weight outside [0,1]");
    if (!index_.emplace(n.id, i).second) throw GraphError("duplicate argument id '" + n.id + "'");
  }
  attackers_.resize(nodes_.size());
  for (const auto& e : edges_) {
    if (!(e.weight >= 0.0 && e.weight <= 1.0))
      throw GraphError("attack " + e.from + " -> " + e.to + " has weight outside [0,1]");
    attackers_[index(e.to)].push_back(index(e.from));
  }
}

std::size_t WeightedArgumentationGraph::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw GraphError("unknown argument '" + id + "'");
  return it->second;
}

std::set<std::string> grounded_extension(const WeightedArgumentationGraph& g) {
  const auto n = g.size();
  std::vector<bool> in(n, false);
  for (;;) {
    // x is defended when each attacker is attacked by some member.
    std::vector<bool> attacked_by_in(n, false);
    for (std::size_t x = 0; x < n; ++x)
      for (auto b : g.attackers(x))
        if (in[b]) attacked_by_in[x] = true;
    std::vector<bool> next(n, false);
    for (std::size_t x = 0; x < n; ++x)
      next[x] = std::all_of(g.attackers(x).begin(), g.attackers(x).end(),
                            [&](std::size_t b) { return attacked_by_in[b]; });
    if (next == in) break;
    in = std::move(next);
  }
  std::set<std::string> out;
  for (std::size_t x = 0; x < n; ++x)
    if (in[x]) out.insert(g.nodes()[x].id);
  return out;
}

DegreeAssignment h_categorizer_degrees(const WeightedArgumentationGraph& g, const IterationOptions& opts) {
  for (const auto& e : g.edges())
    if (e.weight != 1.0)
      throw NonUnitAttackWeight("attack " + e.from + " -> " + e.to + " has weight " + std::to_string(e.weight) +
                                "; the h-categorizer needs unit attack weights");

  const auto n = g.size();
  std::vector<double> cur(n), next(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = g.nodes()[i].weight;

  DegreeAssignment out;
  auto export_to = [&](DegreeAssignment& d) {
    for (std::size_t i = 0; i < n; ++i) d.degrees[g.nodes()[i].id] = cur[i];
  };

  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (auto b : g.attackers(i)) sum += cur[b];
      next[i] = g.nodes()[i].weight / (1.0 + sum);
      residual = std::max(residual, std::abs(next[i] - cur[i]));
    }
    cur.swap(next);
    out.iterations = it;
    out.residual = residual;
    if (residual < opts.eps) {
      export_to(out);
      return out;
    }
  }
  export_to(out);
  throw NoConvergence("no convergence after " + std::to_string(opts.max_iter) + " iterations (residual " +
                          std::to_string(out.residual) + ")",
                      out);
}

WeightedArgumentationGraph seed_graph_from_theory(const WeightedTheory& t, const std::vector<ArgumentAttack>& attacks,
                                                  const StrengthMethod& m, std::size_t budget) {
  const auto args = enumerate_arguments(t, budget);
  const auto labels = label_arguments(args);
  std::map<std::string, std::string> alias_of;
  std::vector<GraphNode> nodes;
  for (std::size_t i = 0; i < args.size(); ++i) {
    alias_of[labels[i].alias] = labels[i].alias;
    alias_of[labels[i].id] = labels[i].alias;
    nodes.push_back({labels[i].alias, evaluate(m, args[i])});
  }
  auto resolve = [&](const std::string& name) {
    auto it = alias_of.find(name);
    if (it == alias_of.end()) throw GraphError("attack names unknown argument '" + name + "'");
    return it->second;
  };
  std::vector<GraphEdge> edges;
  for (const auto& a : attacks) edges.push_back({resolve(a.from), resolve(a.to), a.weight});
  return WeightedArgumentationGraph(std::move(nodes), std::move(edges));
}

}  // namespace argstr
