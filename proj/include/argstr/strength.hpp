#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argstr/argument.hpp"

namespace argstr {

// Direct forms: fold over the whole basis.
double strength_sp(const Argument& a);
double strength_wl(const Argument& a);

// Recursive forms: premise weight at leaves; top-rule weight combined with the
// antecedents' strengths at inference nodes.
double strength_sp_recursive(const Argument& a);
double strength_wl_recursive(const Argument& a);

/// Binary combining function f: [0,1]^2 -> [0,1].
///
/// `certified` marks functions known analytically to satisfy the f-clauses of
/// well-behavedness (monotone away from 0, 0 is null, 1 is identity). Every
/// built-in t-norm carries the certificate.
struct CombineFn {
  std::string name;
  std::function<double(double, double)> fn;
  bool certified = false;

  double operator()(double x, double y) const { return fn(x, y); }
};

/// Symmetric variadic aggregate g over antecedent strengths.
///
/// `certified` marks functions known to satisfy the g-clauses: g() = 1,
/// g(x) = x, 0 absorbs, appending 1 changes nothing, monotone in each input.
struct AggregateFn {
  std::string name;
  std::function<double(std::span<const double>)> fn;
  bool certified = false;

  double operator()(std::span<const double> xs) const { return fn(xs); }
};

struct AggregationMethod {
  std::string name;
  CombineFn f;
  AggregateFn g;

  /// Both components certified.
  bool certified_well_behaved() const { return f.certified && g.certified; }
};

/// Builds a method from user-supplied functions. Rejects `g` when a sampled
/// permutation test shows it is not symmetric (throws std::invalid_argument);
/// a non-symmetric g would void every guarantee downstream.
AggregationMethod make_aggregation_method(std::string name, CombineFn f, AggregateFn g);

/// Samples g on random tuples and their permutations.
bool sample_symmetry(const AggregateFn& g, unsigned seed = 7, int trials = 200);

/// Strength of `a` under an aggregation method. Antecedent strengths are fed to
/// g in signature order, so isomorphic arguments are evaluated through the
/// same floating-point operations. Shared subarguments are evaluated once.
double eval_aggregation(const AggregationMethod& m, const Argument& a);

// ---- built-in function library ----

namespace fns {
double f_prod(double x, double y);
double f_min(double x, double y);
double f_hamacher(double x, double y);
double f_lukasiewicz(double x, double y);

double g_prod(std::span<const double> xs);
double g_min(std::span<const double> xs);
double g_hamacher(std::span<const double> xs);
double g_lukasiewicz(std::span<const double> xs);
/// Arithmetic mean, with g() = 1. Not well behaved; kept for demonstrations.
double g_mean(std::span<const double> xs);
}  // namespace fns

std::optional<CombineFn> find_combine_fn(std::string_view name);
std::optional<AggregateFn> find_aggregate_fn(std::string_view name);
std::vector<std::string> combine_fn_names();
std::vector<std::string> aggregate_fn_names();

struct DirectSP {};
struct DirectWL {};
using StrengthMethod = std::variant<DirectSP, DirectWL, AggregationMethod>;

std::string method_name(const StrengthMethod& m);
double evaluate(const StrengthMethod& m, const Argument& a);

/// Resolves `sp`, `wl`, `prod-prod`, `min-min`, `prod-min`, `hamacher`,
/// `lukasiewicz`, or any `<f>:<g>` pair of library function names.
std::optional<StrengthMethod> find_method(std::string_view name);

/// Named methods of the registry, in a fixed order.
std::vector<std::string> registered_method_names();

// ---- well-behavedness ----

enum class ClauseStatus { Certified, NoViolationFound, Falsified };

struct ClauseVerdict {
  int clause = 0;  // 1..8
  ClauseStatus status = ClauseStatus::NoViolationFound;
  std::size_t samples = 0;
  std::string witness;  // set when falsified
};

struct WellBehavedVerdict {
  ClauseStatus overall = ClauseStatus::NoViolationFound;
  std::array<ClauseVerdict, 8> clauses{};

  /// First falsified clause, if any.
  std::optional<ClauseVerdict> first_falsified() const;
};

struct GridSpec {
  std::vector<double> points;  // default 0, 0.1, ..., 1.0
  std::size_t max_prefix = 2;  // longest x1..xn prefix used for the g-clauses
  double tolerance = 1e-12;
  bool use_certificates = true;

  static GridSpec standard();
};

/// Certified when the components carry certificates (and `use_certificates`);
/// otherwise every clause is tested on the grid and either falsified with a
/// concrete witness or reported as NoViolationFound with its sample count.
WellBehavedVerdict check_well_behaved(const AggregationMethod& m, const GridSpec& grid = GridSpec::standard());

std::string_view to_string(ClauseStatus s);

}  // namespace argstr
