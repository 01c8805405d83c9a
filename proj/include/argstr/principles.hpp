#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "argstr/argument.hpp"
#include "argstr/generator.hpp"
#include "argstr/strength.hpp"

namespace argstr {

enum class PrincipleId {
  Anonymity,
  Premising,
  StrictArgument,
  Resilience,
  ArgumentDeath,
  AntecedentMaximality,
  AntecedentNeutrality,
  AntecedentWeakening,
  InferentialWeakening,
  InferenceWeightSensitivity,
  Proportionality,
  WeakestLink,
  WeakestLinkLimiting,
};

inline constexpr std::size_t kPrincipleCount = 13;

/// All principles in their canonical order.
const std::array<PrincipleId, kPrincipleCount>& all_principles();

/// Kebab-case name, e.g. `weakest-link-limiting`.
std::string_view to_string(PrincipleId p);
std::optional<PrincipleId> principle_from_string(std::string_view name);

/// Number of arguments an instance of `p` supplies, in order:
///   Anonymity                      A, A'   (isomorphic pair)
///   AntecedentNeutrality/Weakening A, A', A''
///   InferenceWeightSensitivity     A, A'
///   Proportionality                A, A'
///   everything else                A
std::size_t instance_arity(PrincipleId p);

class InstanceShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Comparison policy. Guards (the if-part) must hold with margin kGuardMargin
// so that rounding cannot turn a vacuous instance into a checked one;
// consequent equalities allow kEqualityTolerance. Strict consequent
// inequalities are compared exactly. Weight equalities are exact.
inline constexpr double kGuardMargin = 1e-12;
inline constexpr double kEqualityTolerance = 1e-9;

struct PrincipleCheck {
  bool applicable = false;  // guard held; otherwise the instance is vacuous
  bool holds = true;
  std::vector<double> strengths;  // one per instance argument
  std::string detail;             // human-readable reason when it fails
};

/// Evaluates one instance. Vacuous instances hold. Throws InstanceShapeError
/// when `args.size() != instance_arity(p)`.
PrincipleCheck evaluate_principle(PrincipleId p, const StrengthMethod& m, std::span<const Argument> args);

/// `evaluate_principle(...).holds`.
bool check_principle(PrincipleId p, const StrengthMethod& m, std::span<const Argument> args);

// ---- expected results ----

enum class TableStatus { Satisfied, NotSatisfied, Guaranteed, NotGuaranteed };
std::string_view to_string(TableStatus s);

struct TableEntry {
  TableStatus status;
  std::string theorem;  // descriptive tag, e.g. "sp-principles"
};

/// Rows: `sp`, `wl`, `well-behaved` (any method whose f and g are both
/// certified) and `aggregation` (every other aggregation method). Missing
/// cells mean nothing is known.
std::optional<TableEntry> theorem_table(std::string_view row, PrincipleId p);
std::string_view table_row(const StrengthMethod& m);

// ---- witnesses ----

/// A self-contained falsifying instance: the theory (restricted to what the
/// instance uses) in DSL form and the instance arguments as expressions.
struct Witness {
  PrincipleId principle;
  std::string method;
  std::string theory;
  std::vector<std::string> arguments;
  std::vector<double> strengths;
  std::string detail;
  std::string source;  // "registered" or "search"
};

/// Rebuilds the instance from the witness text and re-checks it.
/// Returns the principle's verdict (false means the violation replays).
/// Throws when the theory or an expression does not parse.
bool replay_witness(const Witness& w, const StrengthMethod& m);

Witness make_witness(PrincipleId p, const StrengthMethod& m, std::span<const Argument> args,
                     const PrincipleCheck& check, std::string source);

// ---- registered counterexamples ----

struct Counterexample {
  PrincipleId principle;
  std::string description;
  std::string theory;                  // DSL text
  std::vector<std::string> arguments;  // expressions over `theory`
};

/// Small hand-made instances known to break a principle for some method.
const std::vector<Counterexample>& registered_counterexamples();

// ---- search ----

struct ProbeConfig {
  GeneratorConfig generator;
  std::size_t trials = 1000;
  std::size_t budget = 4;           // rule applications per enumerated argument
  std::size_t pair_attempts = 4;    // synthesized multi-argument instances per trial
  bool use_registered = true;       // try registered counterexamples first
};

enum class VerdictKind { Falsified, NoCounterexampleFound, KnownByTheorem };
std::string_view to_string(VerdictKind k);

struct PrincipleVerdict {
  PrincipleId principle;
  std::string method;
  VerdictKind kind = VerdictKind::NoCounterexampleFound;
  std::optional<TableEntry> expected;
  std::size_t trials = 0;
  std::size_t instances = 0;       // non-vacuous instances checked
  std::size_t falsifications = 0;  // instances that broke the principle
  std::optional<Witness> witness;  // first falsification (registered first)

  /// A falsification where the table says satisfied/guaranteed.
  bool discrepancy() const;
  /// Agrees with the table: no discrepancy, and NotSatisfied is falsified.
  bool agrees_with_table() const;
};

/// Randomized search for violations of each principle in `ps`. Every trial
/// draws one theory (seeded from the generator seed and the trial index),
/// enumerates it, checks all single-argument instances and a few synthesized
/// multi-argument ones. Results are independent of which principles are
/// requested together.
std::vector<PrincipleVerdict> probe_principles(std::span<const PrincipleId> ps, const StrengthMethod& m,
                                               const ProbeConfig& cfg);

PrincipleVerdict probe_principle(PrincipleId p, const StrengthMethod& m, const ProbeConfig& cfg);

}  // namespace argstr
